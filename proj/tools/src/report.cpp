#include "raysec_app/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>

namespace raysec::app {
namespace {

// JSON has no infinity; unbounded gaps are written as null.
Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json RunReport::to_json() const {
  Json doc;
  doc["command"] = command;
  doc["tool_version"] = kToolVersion;
  if (with_timestamp) doc["timestamp"] = utc_timestamp();
  doc["inputs"] = inputs;
  doc["params"] = params;
  doc["outputs"] = outputs;
  doc["passed"] = passed;
  return doc;
}

Json strip_timestamp(Json report) {
  report.erase("timestamp");
  return report;
}

Json to_json(const RootResult& result) {
  Json doc;
  doc["roots"] = complex_list(result.roots);
  doc["residuals"] = result.residuals;
  doc["iterations"] = result.iterations;
  doc["converged"] = result.converged;
  Json clusters = Json::array();
  for (const auto& group : group_clusters(result.roots)) {
    if (group.size() > 1) clusters.push_back(group);
  }
  doc["clusters"] = clusters;
  return doc;
}

Json to_json(RayOrientation orientation) {
  return orientation == RayOrientation::NegativeAxisPower ? "negative" : "positive";
}

Json to_json(const VerificationReport& report) {
  Json per = Json::array();
  for (const ZeroDistance& d : report.per_zero) {
    Json item;
    item["zero"] = complex_to_json(d.zero);
    item["ray"] = d.ray_index;
    item["absolute"] = number_or_null(d.absolute);
    item["relative"] = number_or_null(d.relative);
    per.push_back(item);
  }
  Json doc;
  doc["per_zero"] = per;
  doc["max_relative_distance"] = number_or_null(report.max_relative_distance);
  doc["tolerance"] = report.tolerance;
  doc["passed"] = report.passed;
  return doc;
}

Json to_json(const BracketReport& report) {
  Json samples = Json::array();
  for (const ThetaSample& s : report.theta_samples) {
    samples.push_back({{"h", s.h}, {"theta", s.theta}, {"x", s.x}, {"sign", s.h_sign}, {"g", s.g}});
  }
  Json brackets = Json::array();
  for (const RootBracket& b : report.brackets) {
    brackets.push_back({{"lo", b.lo},
                        {"hi", b.hi},
                        {"source", b.source == BracketSource::Endpoint ? "endpoint" : "samples"}});
  }
  Json doc;
  doc["theta_samples"] = samples;
  doc["sign_at_zero"] = report.sign_at_zero;
  doc["sign_at_infinity"] = report.sign_at_infinity;
  doc["brackets"] = brackets;
  doc["refined_roots"] = report.refined_roots;
  doc["expected_count"] = report.expected_count;
  doc["descartes_count"] = report.descartes_count;
  doc["alternating"] = report.alternating;
  doc["in_theorem_scope"] = report.in_theorem_scope;
  doc["vacuous"] = report.vacuous;
  doc["diagnostics"] = report.diagnostics;
  doc["passed"] = report.passed;
  return doc;
}

Json to_json(const StabilizedZeros& zeros) {
  Json levels = Json::array();
  for (const TruncationLevel& l : zeros.levels) {
    levels.push_back({{"n", l.n},
                      {"zeros_in_disk", l.zeros_in_disk},
                      {"raw_gap", number_or_null(l.raw_gap)},
                      {"gap", number_or_null(l.gap)},
                      {"oracle_converged", l.oracle_converged},
                      {"counted_zeros", l.counted_zeros},
                      {"complete", l.complete}});
  }
  Json doc;
  doc["zeros_in_disk"] = complex_list(zeros.zeros_in_disk);
  doc["boundary_zeros"] = complex_list(zeros.boundary_zeros);
  doc["disk_radius"] = zeros.disk_radius;
  doc["n_final"] = zeros.n_final;
  doc["hausdorff_gap"] = number_or_null(zeros.hausdorff_gap);
  doc["stabilized"] = zeros.stabilized;
  doc["levels"] = levels;
  doc["rays"] = to_json(zeros.report);
  return doc;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace raysec::app
