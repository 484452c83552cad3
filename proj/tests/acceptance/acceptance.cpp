// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and time limits are fixed here.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "raysec/entire.hpp"
#include "raysec/matching.hpp"
#include "raysec/multisection.hpp"
#include "raysec/rays.hpp"
#include "raysec/rootfind.hpp"
#include "raysec/sampling.hpp"
#include "raysec/theta.hpp"
#include "raysec_app/fixtures.hpp"
#include "raysec_app/fuzz.hpp"

using namespace raysec;
namespace fx = raysec::app::fixtures;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // <= 0: no limit
  std::function<Outcome()> body;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const RayFamily kNeg3{3, RayOrientation::NegativeAxisPower};
const RayFamily kNeg4{4, RayOrientation::NegativeAxisPower};

Outcome multisection_exactness() {
  const Polynomial p = fx::degree9();
  const bool a = multisect(p, {3, 0}) == Polynomial{80.0, 0.0, 0.0, 1492.0, 0.0, 0.0, 369.0, 0.0, 0.0, 1.0};
  const bool b = multisect(p, {4, 0}) == Polynomial{80.0, 0.0, 0.0, 0.0, 1392.0, 0.0, 0.0, 0.0, 15.0};
  return {a && b, std::string("m=3: ") + (a ? "exact" : "MISMATCH") + ", m=4: " + (b ? "exact" : "MISMATCH")};
}

Outcome theorem_sector_fixture() {
  const auto roots = find_roots(multisect(fx::degree9(), {3, 0})).roots;
  const VerificationReport rep = verify_on_rays(roots, kNeg3, 1e-8);
  const double asym = rotation_asymmetry(roots, std::polar(1.0, 2 * kPi / 3));
  const bool ok = roots.size() == 9 && rep.passed && asym <= 1e-7;
  return {ok, std::to_string(roots.size()) + " zeros, max rel ray distance " + fmt("%.2e", rep.max_relative_distance) +
                  " (<= 1e-8), orbit asymmetry " + fmt("%.2e", asym) + " (<= 1e-7)"};
}

Outcome theorem_halfplane_fixture() {
  const auto roots = find_roots(multisect(fx::degree9(), {4, 0})).roots;
  const VerificationReport rep = verify_on_rays(roots, kNeg4, 1e-8);
  return {roots.size() == 8 && rep.passed,
          std::to_string(roots.size()) + " zeros, max rel ray distance " + fmt("%.2e", rep.max_relative_distance) +
              " (<= 1e-8)"};
}

Outcome counterexample() {
  const Polynomial p = fx::counterexample();
  const bool exact = p == Polynomial{1030301.0, 61206.0, 31815.0, 1220.0, 315.0, 6.0, 1.0};
  const Polynomial s = multisect(p, {3, 0});
  const bool section_ok = s == fx::counterexample_section();
  const VerificationReport rep = verify_on_rays(find_roots(s).roots, kNeg3, 1e-7);
  const bool ok = exact && section_ok && !rep.passed && rep.max_relative_distance > 0.05;
  return {ok, std::string("expansion ") + (exact ? "exact" : "WRONG") + ", section " +
                  (section_ok ? "exact" : "WRONG") + ", verification " + (rep.passed ? "passed" : "failed") +
                  " with max rel distance " + fmt("%.3f", rep.max_relative_distance) + " (> 0.05)"};
}

Outcome bracketing_count() {
  const Polynomial p = fx::degree9();
  Outcome out;
  for (int m : {3, 4}) {
    const std::size_t expected = m == 3 ? 3 : 2;
    const ThetaContext ctx = ThetaContext::from_polynomial(p, m);
    const BracketReport rep = bracket_positive_roots(p, {m, 0}, ctx);
    const auto predicted = orbit_expand(rep.refined_roots, {m, 0});
    const auto oracle = find_roots(multisect(p, {m, 0})).roots;
    const double gap = max_matching_distance(predicted, oracle);
    const bool ok = rep.passed && rep.refined_roots.size() == expected && rep.descartes_count == expected &&
                    gap <= 1e-7;
    out.ok = out.ok && ok;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += "m=" + std::to_string(m) + ": " + std::to_string(rep.refined_roots.size()) + " roots (want " +
                  std::to_string(expected) + "), oracle match " + fmt("%.1e", gap);
  }
  return out;
}

Outcome lemma_suite() {
  Rng rng(20240601);
  std::size_t contexts = 0, q_fail = 0, mono_fail = 0, limit_fail = 0;
  double worst_q01 = 0.0;
  auto run = [&](const Region& region, int m) {
    const auto zeros = sample_conforming_roots(region, rng.uniform_int(1, 12), rng.next_u64());
    const ThetaContext ctx(zeros, m);
    const double n = static_cast<double>(ctx.n());
    ++contexts;
    for (int s = 0; s < 5; ++s) {
      const double x = rng.log_uniform(1e-2, 1e2);
      for (int k = 0; k < 2; ++k) {
        const double dev = std::abs(q_product(ctx, k, x) - 1.0);
        worst_q01 = std::max(worst_q01, dev);
        if (dev > 1e-10) ++q_fail;
      }
      for (int k = 2; k < m; ++k) {
        if (!(q_product(ctx, k, x) < 1.0)) ++q_fail;
      }
    }
    for (int i = 0; i < 50; ++i) {
      const double x = std::pow(10.0, -3.0 + 6.0 * i / 49.0);
      const double h = 1e-4 * x;
      if (!(theta_map(ctx, x + h) - theta_map(ctx, x - h) > 0.0)) ++mono_fail;
    }
    if (!(theta_map(ctx, 1e-9) < 1e-4 * n)) ++limit_fail;
    if (!(std::abs(theta_map(ctx, 1e9) - ctx.theta_upper()) < 1e-4 * n)) ++limit_fail;
  };
  for (int i = 0; i < 100; ++i) {
    for (int m : {3, 4, 5}) run(Region::sector(kPi - kPi / m), m);
    for (int m : {4, 6}) run(Region::left_half_plane(), m);
  }
  const bool ok = q_fail == 0 && mono_fail == 0 && limit_fail == 0;
  return {ok, std::to_string(contexts) + " contexts; q failures " + std::to_string(q_fail) + " (worst |q-1| for k<2 " +
                  fmt("%.1e", worst_q01) + "), monotonicity failures " + std::to_string(mono_fail) +
                  ", limit failures " + std::to_string(limit_fail)};
}

Outcome fuzz_theorems() {
  app::FuzzOptions sector;
  sector.region = Region::sector(2 * kPi / 3);
  sector.m = 3;
  sector.count = 500;
  sector.degree_min = 3;
  sector.degree_max = 12;
  sector.seed = 42;
  sector.tol = 1e-6;
  app::FuzzOptions half = sector;
  half.region = Region::left_half_plane();
  half.m = 4;
  const auto a = app::run_fuzz(sector);
  const auto b = app::run_fuzz(half);
  return {a.pass_rate == 1.0 && b.pass_rate == 1.0,
          "m=3 sector " + std::to_string(a.passed) + "/500 (worst " + fmt("%.1e", a.worst_relative) + "), m=4 half plane " +
              std::to_string(b.passed) + "/500 (worst " + fmt("%.1e", b.worst_relative) + ")"};
}

Outcome entire_stabilization() {
  Outcome out;
  struct Case {
    const char* label;
    WeierstrassSpec spec;
    int m;
    double radius;
  };
  for (const Case& c : {Case{"m=3 R=6", fx::entire_sector(), 3, 6.0}, Case{"m=4 R=5", fx::entire_halfplane(), 4, 5.0}}) {
    StabilizationOptions o;
    o.radius = c.radius;
    o.tol = 1e-6;
    o.schedule = {16, 32, 64, 128};
    const StabilizedZeros z = section_zeros_in_disk(c.spec, {c.m, 0}, o);
    const bool ok = z.stabilized && z.hausdorff_gap <= 1e-6 && z.n_final <= 128 && z.report.passed &&
                    z.levels.back().complete;
    out.ok = out.ok && ok;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += std::string(c.label) + ": " + (z.stabilized ? "stabilized" : "NOT stabilized") + " at n=" +
                  std::to_string(z.n_final) + ", gap " + fmt("%.1e", z.hausdorff_gap) + ", raw gap " +
                  fmt("%.1e", z.levels.back().raw_gap) + ", " + std::to_string(z.zeros_in_disk.size()) +
                  " zeros (argument count " + std::to_string(z.levels.back().counted_zeros) + " inside R+1/2), max rel ray distance " + fmt("%.1e", z.report.max_relative_distance);
  }
  return out;
}

Outcome oracle_quality() {
  std::mt19937_64 gen(9);
  std::uniform_int_distribution<int> deg(1, 30);
  std::uniform_real_distribution<double> logr(std::log(1e-2), std::log(1e2)), ang(-kPi, kPi);
  double worst = 0.0;
  bool deterministic = true;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = deg(gen);
    std::vector<Complex> roots;
    while (static_cast<int>(roots.size()) < n) {
      const Complex z = std::polar(std::exp(logr(gen)), ang(gen));
      bool far = true;
      for (const Complex& w : roots) far = far && std::abs(w - z) >= 1e-2;
      if (far) roots.push_back(z);
    }
    const Polynomial p = from_roots(roots, 1.0);
    const RootResult a = find_roots(p);
    const RootResult b = find_roots(p);
    worst = std::max(worst, max_matching_distance(a.roots, roots));
    deterministic = deterministic && a.roots.size() == b.roots.size() &&
                    std::memcmp(a.roots.data(), b.roots.data(), a.roots.size() * sizeof(Complex)) == 0 &&
                    std::memcmp(a.residuals.data(), b.residuals.data(), a.residuals.size() * sizeof(double)) == 0;
  }
  return {worst < 1e-8 && deterministic,
          "worst matched error " + fmt("%.2e", worst) + " (< 1e-8), reruns " +
              (deterministic ? "byte-identical" : "DIFFER")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "multisection exactness", 0.010, multisection_exactness},
      {2, "sector theorem fixture", 1.0, theorem_sector_fixture},
      {3, "half-plane theorem fixture", 0.0, theorem_halfplane_fixture},
      {4, "counterexample reproduction", 0.0, counterexample},
      {5, "bracketing count", 0.0, bracketing_count},
      {6, "lemma suite", 10.0, lemma_suite},
      {7, "fuzz theorems", 60.0, fuzz_theorems},
      {8, "entire-function stabilization", 30.0, entire_stabilization},
      {9, "oracle quality", 0.0, oracle_quality},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt("%.3fs", secs);
    if (c.time_limit_s > 0) {
      timing += fmt(" (limit %gs)", c.time_limit_s);
      if (secs > c.time_limit_s) {
        out.ok = false;
        timing += " TOO SLOW";
      }
    }
    if (!out.ok) ++failures;
    std::printf("%s [%d] %s: %s; %s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
