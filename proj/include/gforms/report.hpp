#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace gforms {

using json = nlohmann::json;

/// Machine-readable verdict of a property suite run.
///
/// `failures` stores one serialized witness per failing instance. A check
/// passes iff it has no failures; vacuity is tracked separately so that an
/// implication-form suite whose hypothesis never fired can be rejected by the
/// caller.
struct CheckReport {
  std::string check_id;
  json params = json::object();
  std::uint64_t attempted = 0;
  std::uint64_t nonvacuous = 0;
  std::uint64_t passes = 0;
  std::uint64_t skipped = 0;  // budget-exceeded instances, never silently passed
  std::vector<json> failures;
  std::uint64_t runtime_ms = 0;
  json details = json::object();

  bool pass() const { return failures.empty(); }

  json to_json() const {
    json j;
    j["check"] = check_id;
    j["params"] = params;
    j["attempted"] = attempted;
    j["nonvacuous"] = nonvacuous;
    j["passes"] = passes;
    j["skipped"] = skipped;
    j["failures"] = failures;
    j["runtime_ms"] = runtime_ms;
    j["verdict"] = pass() ? "pass" : "fail";
    if (!details.empty()) j["details"] = details;
    return j;
  }
};

}  // namespace gforms
