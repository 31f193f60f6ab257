#pragma once

#include <stdexcept>

namespace cyclocode {

// Raised when user-supplied parameters violate a documented constraint.
// The message names the specific constraint that failed. CLI exit code 2.
struct invalid_params : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an internal cross-check fails: a closed form disagrees with a
// brute-force count, the classification path disagrees with the gcd path, or
// an exact division leaves a remainder. CLI exit code 3.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a requested computation exceeds a configured work cap.
// CLI exit code 4.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cyclocode
