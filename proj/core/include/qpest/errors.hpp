#pragma once

#include <stdexcept>
#include <string>

namespace qpest {

// Error taxonomy used across the library. All inherit std::runtime_error so
// callers that don't care about the category can catch one type.

struct ArgumentError : std::runtime_error {
    explicit ArgumentError(const std::string& what) : std::runtime_error(what) {}
};

// Exact enumeration requested beyond the supported digit count.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Measurement result has zero likelihood under the prior support.
struct InconsistentResultError : std::runtime_error {
    explicit InconsistentResultError(const std::string& what) : std::runtime_error(what) {}
};

// Requested window lies outside a sampled trajectory.
struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

// Closed-form expansion evaluated outside its validity regime.
struct RegimeViolationError : std::runtime_error {
    explicit RegimeViolationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpest
