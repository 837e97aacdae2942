#pragma once

#include <functional>
#include <string>
#include <vector>

namespace arbor {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    /// Caps the quiver parameter of the exhaustive checks; each check also has
    /// its own ceiling (4 for closure and decision consistency, 3 otherwise).
    int max_n = 4;
    int random_trials = 1000;
    unsigned long long seed = 0x5eedULL;
    /// Ids to run; empty runs all nine.
    std::vector<int> only;
};

// Tolerances of the numeric checks.
inline constexpr long double kChiSlopeTolerance = 1e-9L;
inline constexpr long double kChiStep = 1e-10L;
inline constexpr int kChiSamples = 10'000;

/// Runs the acceptance checks in order, reporting each result as soon as it
/// is known.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options,
    const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& r);

}  // namespace arbor
