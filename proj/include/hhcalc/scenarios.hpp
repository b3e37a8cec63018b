#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hhcalc {

/* Built-in regression scenarios: named lists of (operation, literal inputs,
 * expected output) steps. Steps are self-contained so a failure reports in
 * isolation; expected values are exact integers. */

struct StepResult {
    std::string name;
    std::string op;
    std::string origin; // where the expected value comes from, in domain terms
    bool passed = false;
    nlohmann::json expected;
    nlohmann::json actual;  // null when the step threw
    std::string message;    // error text when the step threw
};

struct ScenarioReport {
    std::string scenario;
    bool all_passed = false;
    std::vector<StepResult> steps;
};

std::vector<std::string> scenario_names();

// Executes every step of the named scenario; throws UnknownScenarioError for
// names not in scenario_names(). Step-level computation errors are embedded in
// the report, not thrown.
ScenarioReport run_scenario(const std::string& name);

nlohmann::json report_to_json(const ScenarioReport& report);
std::string format_report(const ScenarioReport& report);

} // namespace hhcalc
