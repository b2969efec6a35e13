#pragma once

#include <stdexcept>
#include <string>

namespace frameposet {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input or violated precondition (CLI exit code 2).
struct ValidationError : Error {
    using Error::Error;
};

// Exact and float scalars (or incompatible exact variants) mixed in one
// computation.
struct MixedModeError : ValidationError {
    using ValidationError::ValidationError;
};

// A zero vector where the operation requires none.
struct ZeroVectorError : ValidationError {
    using ValidationError::ValidationError;
};

// Configured limit exceeded: subset scans, witness search bounds,
// retry budgets (CLI exit code 3).
struct ResourceCapError : Error {
    using Error::Error;
};

// A best-effort solver found nothing; not a proof of infeasibility
// (CLI exit code 4).
struct InconclusiveError : Error {
    using Error::Error;
};

// Distinct report for scalability queries on frames without a strict scaling.
struct NoStrictScalingError : ValidationError {
    using ValidationError::ValidationError;
};

} // namespace frameposet
