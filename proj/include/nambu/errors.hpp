#pragma once

#include <stdexcept>
#include <string>

namespace nambu {

// Shape mismatches: wrong vector length, wrong arity, unequal axis extents.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Out-of-range tensor or basis index.
struct BoundsError : std::out_of_range {
    explicit BoundsError(const std::string& msg) : std::out_of_range(msg) {}
};

// Bad configuration: unknown builtin, parent mismatch, degree/arity mismatch,
// violated construction constraint.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation not available for this value (e.g. trace form without matrices).
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input file problems: syntax or schema violations, with location info in msg.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nambu
