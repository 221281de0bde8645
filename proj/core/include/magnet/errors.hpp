#pragma once

#include <stdexcept>
#include <string>

namespace magnet {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments, malformed files, dimension mismatches. CLI exit code 1.
struct InputError : Error {
    using Error::Error;
};

// Rank deficiency, EM degeneracy, vanishing acceptance rates and other
// failures of the numbers rather than the caller. CLI exit code 2.
struct NumericalError : Error {
    using Error::Error;
};

// density_at_point: no candidate preimage reconstructs the query point.
struct NotOnManifoldError : NumericalError {
    using NumericalError::NumericalError;
};

// density_at_point: candidates from two distinct regions both reconstruct
// the query point, i.e. the generated surface self-intersects there.
struct FoldingError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace magnet
