#pragma once

#include <string>
#include <vector>

namespace nambu {

// One violated identity instance: the basis index tuple (0-based) and the
// nonzero residual rendered canonically.
struct Violation {
    std::vector<std::size_t> indices;
    std::string residual;

    bool operator==(const Violation&) const = default;
};

// Result of one exhaustive or symbolic check. Violations are data, not
// errors; an empty list means the identity holds. Deterministic: violations
// are kept sorted by index tuple.
struct CheckReport {
    std::string check;
    std::vector<std::string> notes;
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
};

}  // namespace nambu
