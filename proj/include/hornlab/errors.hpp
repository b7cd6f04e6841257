#pragma once

#include <stdexcept>

namespace hornlab {

/// Violated operation precondition or malformed input. Maps to CLI exit code 2.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Requested work exceeds the desk-scale enumeration cap. Maps to CLI exit code 2.
struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal invariant failure; indicates a bug, not bad input. Maps to CLI exit code 3.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Numerical pathology in the floating-point oracle (eigensolver non-convergence,
/// residual contract violation).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hornlab
