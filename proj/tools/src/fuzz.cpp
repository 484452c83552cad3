#include "raysec_app/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "raysec/multisection.hpp"
#include "raysec/rootfind.hpp"
#include "raysec/sampling.hpp"

namespace raysec::app {

FuzzCase run_fuzz_case(const FuzzOptions& options, int index) {
  FuzzCase c;
  c.index = index;
  c.seed = mix_seed(options.seed, static_cast<std::uint64_t>(index));
  Rng rng(c.seed);
  c.degree = rng.uniform_int(options.degree_min, options.degree_max);
  c.poly = sample_conforming_polynomial(options.region, c.degree, mix_seed(c.seed, 1));

  const RayFamily family{options.m, RayOrientation::NegativeAxisPower};
  for (int r = 0; r < options.m; ++r) {
    const Polynomial section = multisect(c.poly, {options.m, r});
    if (section.is_zero()) continue;
    const RootResult found = find_roots(section);
    const VerificationReport report = verify_on_rays(found.roots, family, options.tol);
    c.worst_relative = std::max(c.worst_relative, report.max_relative_distance);
    if (!found.converged) c.oracle_converged = false;
    if (!report.passed || !found.converged) c.failing_sections.push_back(r);
  }
  c.passed = c.failing_sections.empty();
  return c;
}

FuzzSummary run_fuzz(const FuzzOptions& options) {
  if (options.m < 2) throw InvalidInput("fuzz: m must be at least 2");
  if (options.count < 0) throw InvalidInput("fuzz: count must be nonnegative");
  if (options.degree_min < 0 || options.degree_min > options.degree_max) {
    throw InvalidInput("fuzz: degree range must satisfy 0 <= min <= max");
  }

  FuzzSummary summary;
  summary.cases.resize(static_cast<std::size_t>(options.count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < options.count; i = next++) summary.cases[static_cast<std::size_t>(i)] = run_fuzz_case(options, i);
  };
  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(1, options.count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (const FuzzCase& c : summary.cases) {
    if (c.passed) ++summary.passed;
    summary.worst_relative = std::max(summary.worst_relative, c.worst_relative);
  }
  if (options.count > 0) summary.pass_rate = static_cast<double>(summary.passed) / options.count;

  if (options.dump_dir) {
    std::filesystem::create_directories(*options.dump_dir);
    for (const FuzzCase& c : summary.cases) {
      if (c.passed) continue;
      const auto path = *options.dump_dir / ("case_" + std::to_string(c.index) + ".json");
      write_text(path, emit_polynomial_text(c.poly));
      summary.dumped.push_back(path);
    }
  }
  return summary;
}

Json to_json(const FuzzSummary& summary) {
  Json failing = Json::array();
  for (const FuzzCase& c : summary.cases) {
    if (c.passed) continue;
    failing.push_back({{"index", c.index},
                       {"seed", c.seed},
                       {"degree", c.degree},
                       {"failing_sections", c.failing_sections},
                       {"worst_relative", c.worst_relative},
                       {"oracle_converged", c.oracle_converged},
                       {"coeffs", complex_list(c.poly.coeffs())}});
  }
  Json dumped = Json::array();
  for (const auto& p : summary.dumped) dumped.push_back(p.string());
  Json doc;
  doc["cases"] = summary.cases.size();
  doc["passed"] = summary.passed;
  doc["pass_rate"] = summary.pass_rate;
  doc["worst_relative_distance"] = summary.worst_relative;
  doc["failing"] = failing;
  doc["dumped"] = dumped;
  return doc;
}

}  // namespace raysec::app
