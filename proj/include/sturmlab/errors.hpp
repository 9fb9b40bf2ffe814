#pragma once

#include <stdexcept>
#include <string>

namespace sturmlab {

// Thrown when floor(x + n*alpha) cannot be decided at the current precision,
// i.e. the enclosure of the argument straddles an integer.
struct UndecidableFloor : std::runtime_error {
    long term_index;
    explicit UndecidableFloor(long n)
        : std::runtime_error("undecidable floor at series term " + std::to_string(n)),
          term_index(n) {}
};

// Requested t lies below the last control node of the modulation table.
struct DepthExceeded : std::runtime_error {
    explicit DepthExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Orbit handed to periodic_exponent is not a cycle of the base map.
struct NotPeriodic : std::runtime_error {
    explicit NotPeriodic(const std::string& what) : std::runtime_error(what) {}
};

// A generator evaluation hit an OnBoundary classification (or an
// escalation cap) and no sound value can be produced.
struct EvaluationUndecidable : std::runtime_error {
    explicit EvaluationUndecidable(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sturmlab
