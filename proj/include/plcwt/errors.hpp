#pragma once

#include <stdexcept>
#include <string>

namespace plcwt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridMismatch : Error {
    using Error::Error;
};

/// Chirp phase step between adjacent samples would exceed pi.
struct BandwidthError : Error {
    using Error::Error;
};

struct ScaleError : Error {
    using Error::Error;
};

struct AdmissibilityError : Error {
    using Error::Error;
};

/// Admissibility quadrature failed to stabilize within the refinement budget.
struct DivergenceError : Error {
    using Error::Error;
};

/// Moment integrand not resolved: the field does not decay at the grid border.
struct MomentOverflow : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct EmptyStack : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace plcwt
