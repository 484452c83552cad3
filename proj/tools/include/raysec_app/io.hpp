#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "raysec/entire.hpp"
#include "raysec/poly.hpp"

namespace raysec::app {

using Json = nlohmann::ordered_json;

/// Malformed input file. what() carries the source name and, where known,
/// a line number.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParsedPolynomial {
  Polynomial poly;
  std::vector<std::string> warnings;
};

/// {"coeffs": [[re, im], ...]} in ascending degree, or
/// {"roots": [[re, im], ...], "leading": [re, im]} (leading defaults to 1).
/// Exactly one of coeffs/roots must be present.
ParsedPolynomial parse_polynomial_text(std::string_view text, const std::string& source = "<input>");
ParsedPolynomial parse_polynomial_file(const std::filesystem::path& path);

/// {"coeffs": ...} document; parse_polynomial_text(emit) reproduces p bitwise.
Json emit_polynomial(const Polynomial& p);
std::string emit_polynomial_text(const Polynomial& p);

/// {"p": int, "A": x, "B_eff": x, "C": x, "zeros": [[re, im], ...]}.
WeierstrassSpec parse_spec_text(std::string_view text, const std::string& source = "<input>");
WeierstrassSpec parse_spec_file(const std::filesystem::path& path);
Json emit_spec(const WeierstrassSpec& spec);

Json complex_to_json(Complex z);
Json complex_list(const std::vector<Complex>& zs);

std::string read_text(const std::filesystem::path& path);
/// Writes text, throwing std::runtime_error when the path is not writable.
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace raysec::app
