#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sc6 {

// Outcome of a mathematical verification pass. A check that cannot even
// run (bad preconditions, I/O trouble) throws instead; a falsified
// assertion lands here as a failure entry.
struct CheckReport {
    std::string name;
    std::uint64_t checks = 0;
    std::vector<std::string> failures;
    std::optional<std::int64_t> first_failure_index;

    CheckReport() = default;
    explicit CheckReport(std::string report_name) : name(std::move(report_name)) {}

    bool passed() const { return failures.empty(); }

    void count() { ++checks; }

    void fail(std::int64_t index, std::string message) {
        if (!first_failure_index) first_failure_index = index;
        if (failures.size() < 32) failures.push_back(std::move(message));
        else if (failures.size() == 32) failures.push_back("... more failures suppressed");
    }

    std::string summary() const {
        std::string s = name + ": " + (passed() ? "pass" : "FAIL") +
                        " (" + std::to_string(checks) + " checks";
        if (!passed()) s += ", " + std::to_string(failures.size()) + " failures";
        s += ")";
        return s;
    }
};

} // namespace sc6
