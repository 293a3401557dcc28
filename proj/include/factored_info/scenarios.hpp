#pragma once

#include <string>
#include <vector>

namespace factored_info {

struct CheckLine {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct ScenarioResult {
  std::string name;
  std::vector<CheckLine> checks;

  bool passed() const;
};

// Names of the built-in verification scenarios, in presentation order.
const std::vector<std::string>& scenario_names();

// Runs one scenario. Throws std::invalid_argument for unknown names.
ScenarioResult run_scenario(const std::string& name);

// Runs every scenario and, at the end, asserts that the whole public
// operation surface was exercised (call-registry coverage).
std::vector<ScenarioResult> run_all_scenarios();

}  // namespace factored_info
