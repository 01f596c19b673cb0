#pragma once

#include <stdexcept>

namespace bsg {

/// Malformed instance or out-of-domain parameters. CLI exit code 2.
struct InvalidInstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A size guard tripped before an exponential-cost computation. CLI exit code 3.
struct GuardExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. CLI exit code 4.
struct VerificationError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace bsg
