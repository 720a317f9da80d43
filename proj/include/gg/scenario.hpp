#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gg/report.hpp"

namespace gg {

/// A verification scenario: parsed JSON with a dispatch kind. The payload is
/// kept opaque here; run_scenario validates it per kind.
struct Scenario {
  std::string name;
  std::string kind;  // gk-verify | courant-axioms | reduction | tduality |
                     // bialg | linear-lemmas
  std::string payload;  // raw JSON text of the payload object
};

struct ScenarioError : std::runtime_error {
  explicit ScenarioError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parse a scenario file; throws ScenarioError with field diagnostics.
Scenario load_scenario(const std::string& path);

/// Dispatch to the module pipeline for the scenario's kind. Deterministic
/// for a fixed scenario (randomized suites draw from the payload seed).
Report run_scenario(const Scenario& sc);

/// Bundled scenario names with one-line descriptions.
std::vector<std::pair<std::string, std::string>> scenario_catalog();

/// Human-readable statement of the identity a check id verifies; throws
/// ScenarioError for unknown ids.
std::string explain_check(const std::string& id);

}  // namespace gg
