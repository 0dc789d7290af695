#pragma once

// Named end-to-end verification scenarios shared by `framelab verify` and the
// acceptance test binary. Every scenario pins its own tolerances; a caller may
// override the main comparison tolerance.

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace framelab {

struct Check {
    std::string label;
    double value = 0.0;
    double threshold = 0.0;
    std::string relation;  // "<=", ">=", "<", ">", "=="
    bool ok = false;
    double margin = 0.0;   // distance to the threshold, positive when ok
};

struct ScenarioResult {
    std::string name;
    std::string summary;
    bool passed = false;
    std::vector<Check> checks;
    double seconds = 0.0;
};

struct ScenarioOptions {
    std::optional<double> tol;  // replaces the scenario's pinned tolerance
};

struct ScenarioInfo {
    std::string name;
    std::string summary;
};

std::vector<ScenarioInfo> list_scenarios();

/// The twelve scenarios of the acceptance suite, in order.
std::vector<std::string> acceptance_scenarios();

/// Throws std::invalid_argument for an unknown name. Exceptions raised inside
/// the scenario are caught and reported as a failed check.
ScenarioResult run_scenario(const std::string& name, const ScenarioOptions& options = {});

}  // namespace framelab
