// One line per acceptance criterion; exit status 1 if any fails.

#include <iostream>

#include "arbor/acceptance.hpp"

int main() {
    arbor::AcceptanceOptions options;  // n <= 4 for closure and consistency, n <= 3 elsewhere
    const auto results = arbor::run_acceptance(options, [](const arbor::CriterionResult& r) {
        std::cout << arbor::format_result(r) << std::endl;
    });
    int failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
