#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sc6 {

// quick caps the bounds for CI turnaround; full runs every criterion at
// its contractual bound.
enum class AcceptanceLevel { quick, full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the 15 acceptance criteria, printing one pass/fail line per
// criterion to `out` as it completes. Returns all results.
std::vector<CriterionResult> run_acceptance(AcceptanceLevel level, std::ostream& out);

} // namespace sc6
