// Exception types shared across the library. Every throw site attaches a
// human-readable message; callers distinguish failure classes by type.

#pragma once

#include <stdexcept>
#include <string>

namespace entmom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// linear algebra
struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NonRealTrace : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct BadParty : Error { using Error::Error; };

// density matrices / states
struct InvalidDensityMatrix : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct NotBipartite : Error { using Error::Error; };

// moments / criteria
struct ZeroTrace : Error { using Error::Error; };
struct TooFewMoments : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NegativeGeometricMeanInput : Error { using Error::Error; };

// id parsing, file formats, numerics utilities
struct UnknownId : Error { using Error::Error; };
struct MatrixFormatError : Error { using Error::Error; };
struct NoSignChange : Error { using Error::Error; };

}  // namespace entmom
