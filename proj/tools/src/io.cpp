#include "raysec_app/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace raysec::app {
namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

// Line holding the first occurrence of "key"; 0 when absent.
std::size_t line_of_key(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  return pos == std::string_view::npos ? 0 : line_of_offset(text, pos);
}

// Line of element `index` of the array under "key", found by scanning the
// raw text; falls back to the key's line.
std::size_t line_of_element(std::string_view text, std::string_view key, std::size_t index) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  std::size_t pos = text.find(quoted);
  if (pos == std::string_view::npos) return 0;
  const std::size_t key_line = line_of_offset(text, pos);
  pos = text.find('[', pos + quoted.size());
  if (pos == std::string_view::npos) return key_line;
  int depth = 0;
  std::size_t seen = 0;
  bool in_string = false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
      continue;
    }
    if (depth == 1 && seen == index && c != ' ' && c != '\n' && c != '\r' && c != '\t' && c != ',') {
      return line_of_offset(text, i);
    }
    if (c == '"') in_string = true;
    else if (c == '[' || c == '{') ++depth;
    else if (c == ']' || c == '}') {
      if (--depth == 0) break;
    } else if (c == ',' && depth == 1) ++seen;
  }
  return key_line;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  std::ostringstream out;
  out << source;
  if (line > 0) out << ":" << line;
  out << ": " << what;
  throw ParseError(out.str());
}

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    fail(source, line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), std::string("malformed JSON: ") + e.what());
  } catch (const nlohmann::json::out_of_range& e) {
    // Number overflow: the message quotes the literal, which locates it.
    const std::string msg = e.what();
    std::size_t line = 0;
    const auto open = msg.find("parsing '");
    if (open != std::string::npos) {
      const auto close = msg.find('\'', open + 9);
      const auto at = text.find(msg.substr(open + 9, close - open - 9));
      if (at != std::string_view::npos) line = line_of_offset(text, at);
    }
    fail(source, line, "number is not finite: " + msg);
  }
}

struct Ctx {
  std::string_view text;
  const std::string& source;
};

double finite_number(const Json& v, const Ctx& ctx, std::size_t line, const std::string& where) {
  if (!v.is_number()) fail(ctx.source, line, where + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(ctx.source, line, where + " is not finite");
  return x;
}

Complex complex_value(const Json& v, const Ctx& ctx, std::size_t line, const std::string& where) {
  if (!v.is_array() || v.size() != 2) fail(ctx.source, line, where + " must be a [re, im] pair");
  return {finite_number(v[0], ctx, line, where + "[0]"), finite_number(v[1], ctx, line, where + "[1]")};
}

std::vector<Complex> complex_array(const Json& doc, const Ctx& ctx, std::string_view key) {
  const Json& arr = doc.at(std::string(key));
  if (!arr.is_array()) fail(ctx.source, line_of_key(ctx.text, key), std::string(key) + " must be an array");
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(complex_value(arr[i], ctx, line_of_element(ctx.text, key, i),
                                std::string(key) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

ParsedPolynomial parse_polynomial_text(std::string_view text, const std::string& source) {
  const Json doc = parse_json(text, source);
  const Ctx ctx{text, source};
  if (!doc.is_object()) fail(source, 1, "top level must be an object");
  const bool has_coeffs = doc.contains("coeffs");
  const bool has_roots = doc.contains("roots");
  if (has_coeffs == has_roots) fail(source, 0, "exactly one of \"coeffs\" or \"roots\" is required");

  ParsedPolynomial out;
  if (has_coeffs) {
    if (doc.contains("leading")) fail(source, line_of_key(text, "leading"), "\"leading\" only applies to the roots form");
    std::vector<Complex> coeffs = complex_array(doc, ctx, "coeffs");
    if (coeffs.empty()) out.warnings.emplace_back("empty coefficient list: zero polynomial");
    out.poly = Polynomial(std::move(coeffs));
  } else {
    const std::vector<Complex> roots = complex_array(doc, ctx, "roots");
    Complex leading = 1.0;
    if (doc.contains("leading")) leading = complex_value(doc["leading"], ctx, line_of_key(text, "leading"), "leading");
    if (leading == Complex{}) fail(source, line_of_key(text, "leading"), "leading coefficient must be nonzero");
    out.poly = from_roots(roots, leading);
  }
  return out;
}

ParsedPolynomial parse_polynomial_file(const std::filesystem::path& path) {
  return parse_polynomial_text(read_text(path), path.string());
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json complex_list(const std::vector<Complex>& zs) {
  Json arr = Json::array();
  for (const Complex& z : zs) arr.push_back(complex_to_json(z));
  return arr;
}

Json emit_polynomial(const Polynomial& p) {
  Json doc;
  doc["coeffs"] = complex_list(p.coeffs());
  return doc;
}

std::string emit_polynomial_text(const Polynomial& p) { return emit_polynomial(p).dump() + "\n"; }

WeierstrassSpec parse_spec_text(std::string_view text, const std::string& source) {
  const Json doc = parse_json(text, source);
  const Ctx ctx{text, source};
  if (!doc.is_object()) fail(source, 1, "top level must be an object");
  for (const char* key : {"A", "B_eff", "C", "zeros"}) {
    if (!doc.contains(key)) fail(source, 0, std::string("missing key \"") + key + "\"");
  }
  WeierstrassSpec spec;
  if (doc.contains("p")) {
    const Json& p = doc["p"];
    if (!p.is_number_integer() || p.get<long long>() < 0) {
      fail(source, line_of_key(text, "p"), "p must be a nonnegative integer");
    }
    spec.p = p.get<int>();
  }
  spec.A = finite_number(doc["A"], ctx, line_of_key(text, "A"), "A");
  spec.B_eff = finite_number(doc["B_eff"], ctx, line_of_key(text, "B_eff"), "B_eff");
  spec.C = finite_number(doc["C"], ctx, line_of_key(text, "C"), "C");
  spec.zeros = complex_array(doc, ctx, "zeros");
  return spec;
}

WeierstrassSpec parse_spec_file(const std::filesystem::path& path) {
  return parse_spec_text(read_text(path), path.string());
}

Json emit_spec(const WeierstrassSpec& spec) {
  Json doc;
  doc["p"] = spec.p;
  doc["A"] = spec.A;
  doc["B_eff"] = spec.B_eff;
  doc["C"] = spec.C;
  doc["zeros"] = complex_list(spec.zeros);
  return doc;
}

std::string read_text(const std::filesystem::path& path) {
  if (std::filesystem::is_directory(path)) throw ParseError(path.string() + ": is a directory");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace raysec::app
