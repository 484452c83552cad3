#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "raysec/rays.hpp"
#include "raysec_app/io.hpp"

namespace raysec::app {

struct FuzzOptions {
  Region region = Region::sector(2.0 * 3.14159265358979323846 / 3.0);
  int m = 3;
  int count = 100;
  int degree_min = 3;
  int degree_max = 12;
  std::uint64_t seed = 0;
  double tol = 1e-6;
  unsigned threads = 0;  // 0: hardware concurrency
  /// Failing cases are written here as case_<index>.json when set.
  std::optional<std::filesystem::path> dump_dir;
};

struct FuzzCase {
  int index = 0;
  std::uint64_t seed = 0;
  int degree = 0;
  Polynomial poly;
  double worst_relative = 0.0;
  std::vector<int> failing_sections;
  bool oracle_converged = true;
  bool passed = true;
};

struct FuzzSummary {
  std::vector<FuzzCase> cases;  // by index
  std::size_t passed = 0;
  double pass_rate = 1.0;
  double worst_relative = 0.0;
  std::vector<std::filesystem::path> dumped;
};

/// Per-case seed: mix_seed(seed, index). The degree is drawn first from
/// that seed, then the polynomial from sample_conforming_polynomial. Every
/// section r = 0..m-1 is solved and checked against the m negative rays.
FuzzCase run_fuzz_case(const FuzzOptions& options, int index);

/// Runs all cases on a worker pool; results do not depend on scheduling.
/// Throws InvalidInput for m < 2, count < 0 or an empty degree range.
FuzzSummary run_fuzz(const FuzzOptions& options);

Json to_json(const FuzzSummary& summary);

}  // namespace raysec::app
