#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <regex>
#include <sstream>

#include "raysec/multisection.hpp"
#include "raysec_app/cli.hpp"
#include "raysec_app/fixtures.hpp"
#include "raysec_app/fuzz.hpp"
#include "raysec_app/io.hpp"
#include "raysec_app/report.hpp"
#include "raysec_app/svg.hpp"

using namespace raysec;
using namespace raysec::app;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(RAYSEC_TEST_TMPDIR) / ::testing::UnitTest::GetInstance()->current_test_info()->name();
  fs::create_directories(dir);
  return dir / name;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(PolynomialFile, ParsesSectionCoefficients) {
  const auto parsed = parse_polynomial_text(
      R"({"coeffs": [[80,0],[0,0],[0,0],[1492,0],[0,0],[0,0],[369,0],[0,0],[0,0],[1,0]]})");
  EXPECT_EQ(parsed.poly, multisect(fixtures::degree9(), {3, 0}));
  EXPECT_TRUE(parsed.warnings.empty());
}

TEST(PolynomialFile, ParsesRootsForm) {
  EXPECT_EQ(parse_polynomial_text(R"({"roots": [[-1,1],[-1,-1]], "leading":[1,0]})").poly, (Polynomial{2.0, 2.0, 1.0}));
  EXPECT_EQ(parse_polynomial_text(R"({"roots": [[2,0]]})").poly, (Polynomial{-2.0, 1.0}));
}

TEST(PolynomialFile, EmptyCoefficientsWarn) {
  const auto parsed = parse_polynomial_text(R"({"coeffs": []})");
  EXPECT_TRUE(parsed.poly.is_zero());
  EXPECT_EQ(parsed.warnings.size(), 1u);
}

TEST(PolynomialFile, ErrorsCarryLineContext) {
  const std::string bad_value = "{\n  \"coeffs\": [\n    [1, 0],\n    [2, \"x\"]\n  ]\n}\n";
  try {
    parse_polynomial_text(bad_value, "p.json");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("p.json:4:"), std::string::npos) << e.what();
  }
  try {
    parse_polynomial_text("{\n \"coeffs\": [[1, 0],\n  [2 0]]}", "q.json");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("q.json:3:"), std::string::npos) << e.what();
  }
  try {
    parse_polynomial_text("{\"coeffs\": [\n[1e999, 0]]}", "r.json");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("r.json:2:"), std::string::npos) << e.what();
  }
}

TEST(PolynomialFile, RejectsAmbiguousOrMalformedDocuments) {
  EXPECT_THROW(parse_polynomial_text(R"({"coeffs": [[1,0]], "roots": []})"), ParseError);
  EXPECT_THROW(parse_polynomial_text(R"({})"), ParseError);
  EXPECT_THROW(parse_polynomial_text(R"([1, 2])"), ParseError);
  EXPECT_THROW(parse_polynomial_text(R"({"coeffs": [[1,0,0]]})"), ParseError);
  EXPECT_THROW(parse_polynomial_text(R"({"coeffs": [[1,0]], "leading": [1,0]})"), ParseError);
  EXPECT_THROW(parse_polynomial_text(R"({"roots": [[1,0]], "leading": [0,0]})"), ParseError);
}

TEST(PolynomialFile, EmitParseRoundTripIsBitwise) {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Complex> a(static_cast<std::size_t>(1 + trial % 30));
    for (auto& c : a) c = {u(gen) * std::pow(10.0, trial % 7 - 3), u(gen) / 3.0};
    a.back() = {1.0 / 3.0, -0.1};
    const Polynomial p(a);
    EXPECT_EQ(parse_polynomial_text(emit_polynomial_text(p)).poly, p);
  }
}

TEST(SpecFile, RoundTrip) {
  const WeierstrassSpec s = fixtures::entire_halfplane();
  const WeierstrassSpec t = parse_spec_text(emit_spec(s).dump());
  EXPECT_EQ(t.p, s.p);
  EXPECT_EQ(t.A, s.A);
  EXPECT_EQ(t.B_eff, s.B_eff);
  EXPECT_EQ(t.C, s.C);
  EXPECT_EQ(t.zeros, s.zeros);
  EXPECT_THROW(parse_spec_text(R"({"A": 0, "B_eff": 1, "C": 0})"), ParseError);
  EXPECT_THROW(parse_spec_text(R"({"p": -1, "A": 0, "B_eff": 1, "C": 0, "zeros": []})"), ParseError);
}

TEST(Svg, DegreeNineSection) {
  const auto roots = find_roots(multisect(fixtures::degree9(), {3, 0})).roots;
  const std::string svg = render_svg(roots, {3, RayOrientation::NegativeAxisPower});
  EXPECT_EQ(count(svg, "class=\"ray\""), 3u);
  EXPECT_EQ(count(svg, "class=\"zero\""), 9u);
  EXPECT_EQ(count(svg, "class=\"axis\""), 2u);
  EXPECT_EQ(svg, render_svg(roots, {3, RayOrientation::NegativeAxisPower}));
}

TEST(Svg, EmptyPointSet) {
  const std::string svg = render_svg({}, {4, RayOrientation::NegativeAxisPower});
  EXPECT_EQ(count(svg, "class=\"ray\""), 4u);
  EXPECT_EQ(count(svg, "class=\"zero\""), 0u);
}

TEST(Svg, ViewportIsPaddedAndRaysReachTheFrame) {
  const std::vector<Complex> pts{{-10, 0}};
  const std::string svg = render_svg(pts, {2, RayOrientation::NegativeAxisPower}, {600, ""});
  // Extent 10 padded to 11: the marker sits 300 * 10/11 px left of centre.
  EXPECT_NE(svg.find("cx=\"27.273\""), std::string::npos);
  // Ray at +pi/2 ends on the top edge.
  EXPECT_NE(svg.find("y2=\"0.000\""), std::string::npos);
}

TEST(Svg, CounterexampleMarkersAreOffRay) {
  const auto roots = find_roots(fixtures::counterexample_section()).roots;
  const std::string svg = render_svg(roots, {3, RayOrientation::NegativeAxisPower});
  EXPECT_EQ(count(svg, "class=\"ray\""), 3u);
  EXPECT_EQ(count(svg, "class=\"zero\""), 6u);
}

TEST(Svg, UnwritablePathThrows) {
  EXPECT_THROW(write_svg("/nonexistent-dir/x.svg", {}, {3}), std::runtime_error);
}

TEST(Cli, MultisectWritesSectionFile) {
  const auto in = scratch("p.json");
  write_text(in, emit_polynomial_text(fixtures::degree9()));
  const CliRun r = run({"multisect", in.string(), "-m", "4", "-r", "0"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_EQ(parse_polynomial_text(r.out).poly, (Polynomial{80.0, 0.0, 0.0, 0.0, 1392.0, 0.0, 0.0, 0.0, 15.0}));
}

TEST(Cli, VerifyPassAndFailExitCodes) {
  const auto good = scratch("good.json");
  const auto bad = scratch("bad.json");
  const auto svg = scratch("plot.svg");
  write_text(good, emit_polynomial_text(fixtures::degree9()));
  write_text(bad, emit_polynomial_text(fixtures::counterexample()));
  const CliRun ok = run({"verify", good.string(), "-m", "3", "-r", "0", "--svg", svg.string()});
  EXPECT_EQ(ok.code, kPass) << ok.err;
  EXPECT_TRUE(fs::exists(svg));
  const Json report = Json::parse(ok.out);
  EXPECT_EQ(report["command"], "verify");
  EXPECT_EQ(report["params"]["m"], 3);
  EXPECT_EQ(report["outputs"]["oracle"]["roots"].size(), 9u);
  EXPECT_TRUE(report["passed"].get<bool>());
  EXPECT_EQ(run({"verify", bad.string(), "-m", "3", "-r", "0"}).code, kVerificationFailure);
}

TEST(Cli, UsageAndParseErrorsExitTwo) {
  const auto bad = scratch("broken.json");
  write_text(bad, "{\"coeffs\": [[1, 0],");
  EXPECT_EQ(run({"roots", bad.string()}).code, kUsageError);
  EXPECT_EQ(run({"roots", scratch("missing.json").string()}).code, kUsageError);
  EXPECT_EQ(run({"verify", bad.string(), "-m", "3"}).code, kUsageError);
  EXPECT_EQ(run({"nonsense"}).code, kUsageError);
  EXPECT_EQ(run({}).code, kUsageError);
  EXPECT_EQ(run({"--help"}).code, kPass);
  const auto good = scratch("good.json");
  write_text(good, emit_polynomial_text(fixtures::degree9()));
  EXPECT_EQ(run({"verify", good.string(), "-m", "3", "-r", "3"}).code, kUsageError);
  EXPECT_EQ(run({"fuzz", "--region", "sector:abc"}).code, kUsageError);
}

TEST(Cli, RootsReport) {
  const auto in = scratch("q.json");
  write_text(in, R"({"roots": [[-1,1],[-1,-1],[-1,0],[-1,0]]})");
  const CliRun r = run({"roots", in.string(), "--no-timestamp"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const Json report = Json::parse(r.out);
  EXPECT_FALSE(report.contains("timestamp"));
  EXPECT_EQ(report["outputs"]["count"], 4);
  EXPECT_EQ(report["outputs"]["clusters"].size(), 1u);
  EXPECT_EQ(report["tool_version"], kToolVersion);
}

TEST(Cli, BracketReport) {
  const auto in = scratch("p.json");
  write_text(in, emit_polynomial_text(fixtures::degree9()));
  const CliRun r = run({"bracket", in.string(), "-m", "3", "-r", "0"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const Json report = Json::parse(r.out);
  EXPECT_EQ(report["outputs"]["refined_roots"].size(), 3u);
  EXPECT_LT(report["outputs"]["oracle_matching_distance"].get<double>(), 1e-7);
}

TEST(Cli, EntireCommand) {
  const auto spec = scratch("spec.json");
  const auto svg = scratch("entire.svg");
  write_text(spec, emit_spec(fixtures::entire_sector()).dump(2));
  const CliRun r = run({"entire", spec.string(), "-m", "3", "-r", "0", "--radius", "6", "--svg", svg.string()});
  ASSERT_EQ(r.code, kPass) << r.err;
  const Json report = Json::parse(r.out);
  EXPECT_TRUE(report["outputs"]["stabilization"]["stabilized"].get<bool>());
  EXPECT_TRUE(fs::exists(svg));

  const CliRun rejected = run({"entire", spec.string(), "-m", "3", "-r", "0", "--raw", "--schedule", "8,16"});
  EXPECT_EQ(rejected.code, kVerificationFailure);  // raw truncation zeros move O(1/n)
  WeierstrassSpec far = fixtures::entire_sector();
  far.zeros = {{-1, 10}, {-1, -10}};
  write_text(spec, emit_spec(far).dump());
  const CliRun invalid = run({"entire", spec.string(), "-m", "3", "-r", "0"});
  EXPECT_EQ(invalid.code, kVerificationFailure);
  EXPECT_FALSE(Json::parse(invalid.out)["outputs"]["violations"].empty());
}

TEST(Cli, ReportsAreReproducibleApartFromTimestamp) {
  const auto in = scratch("p.json");
  write_text(in, emit_polynomial_text(fixtures::degree9()));
  const CliRun a = run({"verify", in.string(), "-m", "4", "-r", "0"});
  const CliRun b = run({"verify", in.string(), "-m", "4", "-r", "0"});
  EXPECT_TRUE(Json::parse(a.out).contains("timestamp"));
  EXPECT_EQ(strip_timestamp(Json::parse(a.out)).dump(), strip_timestamp(Json::parse(b.out)).dump());
  const CliRun c = run({"fuzz", "--count", "20", "--seed", "5", "--no-timestamp"});
  const CliRun d = run({"fuzz", "--count", "20", "--seed", "5", "--no-timestamp", "--threads", "3"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Fuzz, SectorCampaignPasses) {
  FuzzOptions o;
  o.count = 100;
  o.seed = 42;
  const FuzzSummary s = run_fuzz(o);
  EXPECT_EQ(s.pass_rate, 1.0);
  EXPECT_EQ(s.cases.size(), 100u);
  for (std::size_t i = 0; i < s.cases.size(); ++i) EXPECT_EQ(s.cases[i].index, int(i));
}

TEST(Fuzz, EmptyCampaignIsVacuous) {
  FuzzOptions o;
  o.count = 0;
  const FuzzSummary s = run_fuzz(o);
  EXPECT_EQ(s.pass_rate, 1.0);
  EXPECT_TRUE(s.cases.empty());
}

TEST(Fuzz, RejectsBadOptions) {
  FuzzOptions o;
  o.m = 1;
  EXPECT_THROW(run_fuzz(o), InvalidInput);
  o.m = 3;
  o.degree_min = 5;
  o.degree_max = 4;
  EXPECT_THROW(run_fuzz(o), InvalidInput);
}

TEST(Fuzz, FailingCasesAreDumpedAndReplay) {
  FuzzOptions o;
  o.region = Region::left_half_plane();
  o.count = 10;
  o.seed = 7;
  o.tol = 1e-20;  // below rounding, so cases with off-axis roots fail
  o.dump_dir = scratch("dump");
  fs::remove_all(*o.dump_dir);
  const FuzzSummary s = run_fuzz(o);
  ASSERT_LT(s.pass_rate, 1.0);
  ASSERT_EQ(s.dumped.size(), s.cases.size() - s.passed);
  for (const FuzzCase& c : s.cases) {
    if (c.passed) continue;
    const fs::path file = *o.dump_dir / ("case_" + std::to_string(c.index) + ".json");
    EXPECT_EQ(parse_polynomial_file(file).poly, c.poly);
    for (int r : c.failing_sections) {
      const CliRun replay = run({"verify", file.string(), "-m", "3", "-r", std::to_string(r), "--tol", "1e-20"});
      EXPECT_EQ(replay.code, kVerificationFailure) << "case " << c.index << " r " << r;
    }
  }
}

TEST(Cli, DemoWritesFigureArtifacts) {
  const auto dir = scratch("demo");
  const CliRun r = run({"demo", "--out", dir.string(), "--no-timestamp"});
  const Json report = Json::parse(r.out);
  const auto& figs = report["outputs"]["figures"];
  ASSERT_EQ(figs.size(), 5u);
  EXPECT_TRUE(figs[0]["as_expected"].get<bool>());
  EXPECT_TRUE(figs[1]["as_expected"].get<bool>());
  EXPECT_TRUE(figs[2]["expansion_exact"].get<bool>());
  EXPECT_FALSE(figs[2]["on_rays"].get<bool>());
  EXPECT_TRUE(figs[3]["as_expected"].get<bool>());
  for (const char* f : {"figure1_m3.svg", "figure1_m4.svg", "figure2_m3.svg", "figure3_m3.svg", "figure4_m4.svg",
                        "degree9.json", "counterexample.json"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  EXPECT_EQ(r.code, report["passed"].get<bool>() ? kPass : kVerificationFailure);
}
