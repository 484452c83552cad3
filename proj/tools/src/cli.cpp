#include "raysec_app/cli.hpp"

#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>

#include <CLI11.hpp>

#include "raysec/entire.hpp"
#include "raysec/matching.hpp"
#include "raysec/multisection.hpp"
#include "raysec/rootfind.hpp"
#include "raysec/theta.hpp"
#include "raysec_app/fixtures.hpp"
#include "raysec_app/fuzz.hpp"
#include "raysec_app/io.hpp"
#include "raysec_app/report.hpp"
#include "raysec_app/svg.hpp"

namespace raysec::app {
namespace {

namespace fs = std::filesystem;

struct Settings {
  std::string input;
  std::string output;
  std::string svg;
  int m = 3;
  int r = 0;
  double tol = 0.0;
  int max_iter = 200;
  std::string orientation = "negative";
  double radius = 6.0;
  std::vector<int> schedule{16, 32, 64, 128};
  bool raw = false;
  std::string region = "sector";
  int count = 100;
  int degree_min = 3;
  int degree_max = 12;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string dump_dir;
  std::string out_dir = "demo_out";
  bool no_timestamp = false;
};

void emit(const std::string& text, const Settings& s, std::ostream& out) {
  if (s.output.empty() || s.output == "-") {
    out << text;
  } else {
    write_text(s.output, text);
  }
}

int finish(RunReport& report, const Settings& s, std::ostream& out) {
  report.with_timestamp = !s.no_timestamp;
  emit(report.dump(), s, out);
  return report.passed ? kPass : kVerificationFailure;
}

Polynomial load_polynomial(const Settings& s, std::ostream& err) {
  ParsedPolynomial parsed = parse_polynomial_file(s.input);
  for (const auto& w : parsed.warnings) err << "warning: " << s.input << ": " << w << "\n";
  return std::move(parsed.poly);
}

RayFamily family_of(const Settings& s) {
  return RayFamily{s.m, s.orientation == "positive" ? RayOrientation::PositiveAxisPower
                                                    : RayOrientation::NegativeAxisPower};
}

Region parse_region(const std::string& text) {
  if (text == "halfplane") return Region::left_half_plane();
  if (text == "sector") return Region::sector(2.0 * std::numbers::pi / 3.0);
  if (text.rfind("sector:", 0) == 0) {
    std::size_t used = 0;
    const std::string tail = text.substr(7);
    double alpha = 0.0;
    try {
      alpha = std::stod(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tail.size()) throw InvalidInput("region: cannot read angle in '" + text + "'");
    return Region::sector(alpha);
  }
  throw InvalidInput("region must be 'halfplane', 'sector' or 'sector:<alpha>'");
}

int cmd_multisect(const Settings& s, std::ostream& out, std::ostream& err) {
  const Polynomial p = load_polynomial(s, err);
  emit(emit_polynomial_text(multisect(p, SectionParams::make(s.m, s.r))), s, out);
  return kPass;
}

int cmd_roots(const Settings& s, std::ostream& out, std::ostream& err) {
  const Polynomial p = load_polynomial(s, err);
  RunReport report{"roots"};
  report.inputs["file"] = s.input;
  report.inputs["coeffs"] = complex_list(p.coeffs());
  report.params = {{"tol", s.tol}, {"max_iter", s.max_iter}};
  const RootResult found = find_roots(p, RootOptions{s.tol, s.max_iter});
  report.outputs = to_json(found);
  report.outputs["count"] = found.roots.size();
  report.passed = found.converged;
  return finish(report, s, out);
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  const Polynomial p = load_polynomial(s, err);
  const SectionParams params = SectionParams::make(s.m, s.r);
  const Polynomial section = multisect(p, params);
  const RayFamily family = family_of(s);

  RunReport report{"verify"};
  report.inputs["file"] = s.input;
  report.inputs["coeffs"] = complex_list(p.coeffs());
  report.params = {{"m", s.m}, {"r", s.r}, {"tol", s.tol}, {"orientation", to_json(family.orientation)}};
  report.outputs["section"] = complex_list(section.coeffs());

  std::vector<Complex> roots;
  if (section.is_zero()) {
    report.outputs["vacuous"] = true;
  } else {
    const RootResult found = find_roots(section);
    roots = found.roots;
    report.outputs["oracle"] = to_json(found);
    report.outputs["vacuous"] = false;
  }
  const VerificationReport check = verify_on_rays(roots, family, s.tol);
  report.outputs["rays"] = to_json(check);
  report.passed = check.passed;
  if (!s.svg.empty()) {
    write_svg(s.svg, roots, family, {600, "m=" + std::to_string(s.m) + " r=" + std::to_string(s.r)});
    report.outputs["svg"] = s.svg;
  }
  return finish(report, s, out);
}

int cmd_bracket(const Settings& s, std::ostream& out, std::ostream& err) {
  const Polynomial p = load_polynomial(s, err);
  const SectionParams params = SectionParams::make(s.m, s.r);
  RunReport report{"bracket"};
  report.inputs["file"] = s.input;
  report.inputs["coeffs"] = complex_list(p.coeffs());
  report.params = {{"m", s.m}, {"r", s.r}};

  const ThetaContext ctx = ThetaContext::from_polynomial(p, s.m);
  const BracketReport bracket = bracket_positive_roots(p, params, ctx);
  report.outputs = to_json(bracket);
  report.outputs["context_warnings"] = ctx.warnings();

  // Cross-check the bracketed roots against the oracle zeros of P_r.
  const Polynomial section = multisect(p, params);
  if (!section.is_zero()) {
    const std::vector<Complex> predicted = orbit_expand(bracket.refined_roots, params);
    const std::vector<Complex> oracle = find_roots(section).roots;
    report.outputs["orbit_zeros"] = complex_list(predicted);
    const double gap = max_matching_distance(predicted, oracle);
    report.outputs["oracle_matching_distance"] = std::isfinite(gap) ? Json(gap) : Json(nullptr);
  }
  report.passed = bracket.passed;
  return finish(report, s, out);
}

StabilizationOptions stabilization(const Settings& s) {
  StabilizationOptions o;
  o.radius = s.radius;
  o.tol = s.tol;
  o.schedule = s.schedule;
  o.refine = !s.raw;
  return o;
}

int cmd_entire(const Settings& s, std::ostream& out, std::ostream&) {
  const WeierstrassSpec spec = parse_spec_file(s.input);
  const SectionParams params = SectionParams::make(s.m, s.r);
  const ValidationOutcome check = validate_spec(spec, s.m);

  RunReport report{"entire"};
  report.inputs["file"] = s.input;
  report.inputs["spec"] = emit_spec(spec);
  report.params = {{"m", s.m}, {"r", s.r}, {"radius", s.radius}, {"tol", s.tol},
                   {"schedule", s.schedule}, {"refine", !s.raw}};
  report.outputs["violations"] = check.violations;
  if (!check) {
    report.passed = false;
    return finish(report, s, out);
  }
  const StabilizedZeros zeros = section_zeros_in_disk(spec, params, stabilization(s));
  report.outputs["stabilization"] = to_json(zeros);
  report.passed = zeros.stabilized && zeros.report.passed;
  if (!s.svg.empty()) {
    std::vector<Complex> pts = zeros.zeros_in_disk;
    pts.insert(pts.end(), zeros.boundary_zeros.begin(), zeros.boundary_zeros.end());
    write_svg(s.svg, pts, RayFamily{s.m, RayOrientation::NegativeAxisPower});
    report.outputs["svg"] = s.svg;
  }
  return finish(report, s, out);
}

int cmd_fuzz(const Settings& s, std::ostream& out, std::ostream&) {
  FuzzOptions o;
  o.region = parse_region(s.region);
  o.m = s.m;
  o.count = s.count;
  o.degree_min = s.degree_min;
  o.degree_max = s.degree_max;
  o.seed = s.seed;
  o.tol = s.tol;
  o.threads = s.threads;
  if (!s.dump_dir.empty()) o.dump_dir = fs::path(s.dump_dir);

  RunReport report{"fuzz"};
  report.inputs = {{"region", o.region.describe()}};
  report.params = {{"m", o.m},        {"count", o.count}, {"degree_min", o.degree_min},
                   {"degree_max", o.degree_max}, {"seed", o.seed}, {"tol", o.tol}};
  const FuzzSummary summary = run_fuzz(o);
  report.outputs = to_json(summary);
  report.passed = summary.passed == summary.cases.size();
  return finish(report, s, out);
}

// Each demo item records what the figure shows and whether the run agrees.
Json demo_section(const std::string& name, const Polynomial& p, int m, bool expect_on_rays, const fs::path& dir,
                  bool& all_ok) {
  const Polynomial section = multisect(p, {m, 0});
  const RootResult found = find_roots(section);
  const VerificationReport check = verify_on_rays(found.roots, {m, RayOrientation::NegativeAxisPower}, 1e-7);
  write_text(dir / (name + ".json"), emit_polynomial_text(section));
  write_svg(dir / (name + ".svg"), found.roots, {m, RayOrientation::NegativeAxisPower}, {600, name});
  const bool ok = check.passed == expect_on_rays;
  all_ok = all_ok && ok;
  return {{"name", name},
          {"m", m},
          {"section", complex_list(section.coeffs())},
          {"roots", complex_list(found.roots)},
          {"max_relative_distance", check.max_relative_distance},
          {"expected_on_rays", expect_on_rays},
          {"on_rays", check.passed},
          {"as_expected", ok}};
}

Json demo_entire(const std::string& name, const WeierstrassSpec& spec, int m, double radius, const Settings& s,
                 const fs::path& dir, bool& all_ok) {
  Settings local = s;
  local.radius = radius;
  const StabilizedZeros zeros = section_zeros_in_disk(spec, {m, 0}, stabilization(local));
  std::vector<Complex> pts = zeros.zeros_in_disk;
  pts.insert(pts.end(), zeros.boundary_zeros.begin(), zeros.boundary_zeros.end());
  write_text(dir / (name + ".json"), emit_spec(spec).dump(2) + "\n");
  write_svg(dir / (name + ".svg"), pts, {m, RayOrientation::NegativeAxisPower}, {600, name});
  const bool ok = zeros.stabilized && zeros.report.passed;
  all_ok = all_ok && ok;
  Json doc = to_json(zeros);
  doc["name"] = name;
  doc["m"] = m;
  doc["as_expected"] = ok;
  return doc;
}

int cmd_demo(const Settings& s, std::ostream& out, std::ostream&) {
  const fs::path dir = s.out_dir;
  fs::create_directories(dir);
  bool all_ok = true;

  RunReport report{"demo"};
  report.inputs = {{"out_dir", s.out_dir}};
  report.params = {{"tol", s.tol}, {"schedule", s.schedule}, {"refine", !s.raw}};

  const Polynomial p9 = fixtures::degree9();
  write_text(dir / "degree9.json", emit_polynomial_text(p9));
  Json figures = Json::array();
  figures.push_back(demo_section("figure1_m3", p9, 3, true, dir, all_ok));
  figures.push_back(demo_section("figure1_m4", p9, 4, true, dir, all_ok));

  const Polynomial counter = fixtures::counterexample();
  const bool expansion_exact =
      counter == Polynomial{1030301.0, 61206.0, 31815.0, 1220.0, 315.0, 6.0, 1.0};
  all_ok = all_ok && expansion_exact;
  write_text(dir / "counterexample.json", emit_polynomial_text(counter));
  Json fig2 = demo_section("figure2_m3", counter, 3, false, dir, all_ok);
  fig2["expansion"] = complex_list(counter.coeffs());
  fig2["expansion_exact"] = expansion_exact;
  figures.push_back(fig2);

  figures.push_back(demo_entire("figure3_m3", fixtures::entire_sector(), 3, 6.0, s, dir, all_ok));
  figures.push_back(demo_entire("figure4_m4", fixtures::entire_halfplane(), 4, 5.0, s, dir, all_ok));

  report.outputs["figures"] = figures;
  report.passed = all_ok;
  return finish(report, s, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"raysec: multisection zero-geometry toolkit", "raysec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Settings s;
  std::optional<double> tol;

  auto common_out = [&](CLI::App* sub) {
    sub->add_option("-o,--output", s.output, "Write the report here instead of stdout");
    sub->add_flag("--no-timestamp", s.no_timestamp, "Omit the timestamp field");
  };
  auto section_opts = [&](CLI::App* sub) {
    sub->add_option("-m", s.m, "Modulus m")->required()->check(CLI::PositiveNumber);
    sub->add_option("-r", s.r, "Residue r, 0 <= r < m")->required()->check(CLI::NonNegativeNumber);
  };

  auto* multisect_cmd = app.add_subcommand("multisect", "Write the section P_r as a polynomial file");
  multisect_cmd->add_option("file", s.input, "Polynomial file")->required();
  section_opts(multisect_cmd);
  multisect_cmd->add_option("-o,--output", s.output, "Output file (default stdout)");

  auto* roots_cmd = app.add_subcommand("roots", "Find all roots with residuals");
  roots_cmd->add_option("file", s.input, "Polynomial file")->required();
  roots_cmd->add_option("--tol", tol, "Residual tolerance (default 1e-12)");
  roots_cmd->add_option("--max-iter", s.max_iter, "Iteration cap")->check(CLI::NonNegativeNumber);
  common_out(roots_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check that the zeros of P_r lie on the m rays");
  verify_cmd->add_option("file", s.input, "Polynomial file")->required();
  section_opts(verify_cmd);
  verify_cmd->add_option("--tol", tol, "Relative ray distance tolerance (default 1e-7)");
  verify_cmd->add_option("--orientation", s.orientation, "negative or positive")
      ->check(CLI::IsMember({"negative", "positive"}));
  verify_cmd->add_option("--svg", s.svg, "Also write an SVG plot");
  common_out(verify_cmd);

  auto* bracket_cmd = app.add_subcommand("bracket", "Bracket the positive zeros of H with the Theta-map");
  bracket_cmd->add_option("file", s.input, "Polynomial file")->required();
  section_opts(bracket_cmd);
  common_out(bracket_cmd);

  auto* entire_cmd = app.add_subcommand("entire", "Stabilized zeros of f_r in a disk");
  entire_cmd->add_option("file", s.input, "Weierstrass spec file")->required();
  section_opts(entire_cmd);
  entire_cmd->add_option("--radius", s.radius, "Disk radius R")->check(CLI::PositiveNumber);
  entire_cmd->add_option("--tol", tol, "Stabilization and ray tolerance (default 1e-6)");
  entire_cmd->add_option("--schedule", s.schedule, "Truncation levels, e.g. 16,32,64,128")->delimiter(',');
  entire_cmd->add_flag("--raw", s.raw, "Skip refinement on the closed form");
  entire_cmd->add_option("--svg", s.svg, "Also write an SVG plot");
  common_out(entire_cmd);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Seeded ray-verification campaign");
  fuzz_cmd->add_option("--region", s.region, "halfplane, sector or sector:<alpha>");
  fuzz_cmd->add_option("-m", s.m, "Modulus m")->check(CLI::Range(2, 1000));
  fuzz_cmd->add_option("--count", s.count, "Number of cases")->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_option("--degree-min", s.degree_min, "Smallest degree");
  fuzz_cmd->add_option("--degree-max", s.degree_max, "Largest degree");
  fuzz_cmd->add_option("--seed", s.seed, "Campaign seed");
  fuzz_cmd->add_option("--tol", tol, "Relative ray distance tolerance (default 1e-6)");
  fuzz_cmd->add_option("--threads", s.threads, "Worker threads (0: all cores)");
  fuzz_cmd->add_option("--dump-dir", s.dump_dir, "Write failing cases here");
  common_out(fuzz_cmd);

  auto* demo_cmd = app.add_subcommand("demo", "Regenerate the figure data and SVGs from built-in fixtures");
  demo_cmd->add_option("--out", s.out_dir, "Output directory");
  demo_cmd->add_option("--tol", tol, "Stabilization tolerance (default 1e-6)");
  demo_cmd->add_option("--schedule", s.schedule, "Truncation levels")->delimiter(',');
  demo_cmd->add_flag("--raw", s.raw, "Skip refinement on the closed form");
  common_out(demo_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    if (multisect_cmd->parsed()) return cmd_multisect(s, out, err);
    if (roots_cmd->parsed()) {
      s.tol = tol.value_or(1e-12);
      return cmd_roots(s, out, err);
    }
    if (verify_cmd->parsed()) {
      s.tol = tol.value_or(1e-7);
      return cmd_verify(s, out, err);
    }
    if (bracket_cmd->parsed()) return cmd_bracket(s, out, err);
    s.tol = tol.value_or(1e-6);
    if (entire_cmd->parsed()) return cmd_entire(s, out, err);
    if (fuzz_cmd->parsed()) return cmd_fuzz(s, out, err);
    if (demo_cmd->parsed()) return cmd_demo(s, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidInput& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace raysec::app
