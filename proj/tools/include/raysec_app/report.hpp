#pragma once

#include <string>

#include "raysec/entire.hpp"
#include "raysec/rays.hpp"
#include "raysec/rootfind.hpp"
#include "raysec/theta.hpp"
#include "raysec_app/io.hpp"

namespace raysec::app {

inline constexpr const char* kToolVersion = "0.3.0";

/// Envelope shared by every subcommand:
/// {command, tool_version, timestamp, inputs, params, outputs, passed}.
/// The timestamp is the only nondeterministic field.
struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json params = Json::object();
  Json outputs = Json::object();
  bool passed = true;
  bool with_timestamp = true;

  Json to_json() const;
  std::string dump() const { return to_json().dump(2) + "\n"; }
};

/// Same report with the timestamp removed, for comparisons.
Json strip_timestamp(Json report);

Json to_json(const RootResult& result);
Json to_json(const VerificationReport& report);
Json to_json(const BracketReport& report);
Json to_json(const StabilizedZeros& zeros);
Json to_json(RayOrientation orientation);

std::string utc_timestamp();

}  // namespace raysec::app
