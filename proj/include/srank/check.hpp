#pragma once

#include <string>
#include <vector>

namespace srank {

/// One verified comparison in a structured report. Failures are data, not
/// exceptions.
struct Check {
    std::string name;
    std::string anchor;   // e.g. "Theorem 1 (iii)"
    std::string lhs;
    std::string relation; // "=", "<=", ...
    std::string rhs;
    bool pass = false;
    std::string note;
};

inline bool all_pass(const std::vector<Check> &checks) {
    for (const auto &c : checks)
        if (!c.pass)
            return false;
    return true;
}

inline Check compare_le(std::string name, std::string anchor, long long lhs, long long rhs,
                        std::string note = {}) {
    return {std::move(name), std::move(anchor), std::to_string(lhs), "<=", std::to_string(rhs), lhs <= rhs,
            std::move(note)};
}

inline Check compare_eq(std::string name, std::string anchor, long long lhs, long long rhs,
                        std::string note = {}) {
    return {std::move(name), std::move(anchor), std::to_string(lhs), "=", std::to_string(rhs), lhs == rhs,
            std::move(note)};
}

} // namespace srank
