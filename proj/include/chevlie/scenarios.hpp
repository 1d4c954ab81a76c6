#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace chevlie {

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

// One verification report. A scenario that sweeps several finite fields
// emits one report per field leg; `field` names the leg's parameter field
// and `ambient_field` the containing field actually used for matrix entries
// when the two differ. `shadow` marks assertions that verify a statement
// about algebraic groups only at the level of finite point groups.
struct Report {
  std::string id;                // "S1".."S10"
  std::string subject;
  std::string status = "pass";   // pass | fail | skipped
  std::string field;             // "integers", "gf4", "gf8", "gf4(x)", ...
  std::string ambient_field;     // nonempty when entries live in a larger field
  bool shadow = false;
  std::string shadow_note;
  Json metrics = Json::object();
  Json witnesses = Json::array();
  std::string failed_assertion;  // first violated assertion (status "fail")
  Json failure_operands;
  std::string skip_reason;       // set when status is "skipped"
  int64_t elapsed_ms = -1;       // -1 = not recorded

  Json to_json() const;
};

struct SuiteParams {
  std::vector<std::string> ids;  // explicit scenario list; empty runs nothing
  // "gf4" or "gf8" restricts the per-field legs of the multi-field
  // scenarios; legs over other fields (integers, gf2, gf16, gf4(x)) always
  // run because they have no alternative field.
  std::string field_filter;
  uint64_t budget = 1000000;     // element cap per group enumeration
  bool timing = true;
};

const std::vector<std::string>& scenario_ids();

// Runs the requested scenarios and returns the reports of all their legs,
// in scenario order; an empty id list yields an empty report list. Throws
// ScenarioError on an unknown id or field filter.
std::vector<Report> run_suite(const SuiteParams& params);

std::string reports_to_json(const std::vector<Report>& reports);

// 0: all pass. 1: at least one failure. 2: no failure but skipped legs.
int suite_exit_code(const std::vector<Report>& reports);

}  // namespace chevlie
