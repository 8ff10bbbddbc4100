#pragma once

#include <stdexcept>

namespace phosc {

// Input or parameter outside its allowed range.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive refinement exhausted its budget before reaching the tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root bracket endpoints do not straddle a sign change.
struct NoBracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested feature does not exist in the searched region.
struct NoRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace phosc
