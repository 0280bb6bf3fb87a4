#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace qca {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx iu{0.0, 1.0};

/// Base class for all library errors. Subclasses map onto CLI exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration or argument (exit code 1 at the CLI).
struct ConfigError : Error {
    using Error::Error;
};

/// Physics/domain violation at runtime (exit code 2).
struct PhysicsError : Error {
    using Error::Error;
};

/// Filesystem failure (exit code 3).
struct IoError : Error {
    using Error::Error;
};

inline double clamp_unit(double x) {
    return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x);
}

/// Reduce x modulo `period` into (-period/2, period/2].
inline double reduce_periodic(double x, double period) {
    double r = x - period * std::floor(x / period + 0.5);
    if (r <= -0.5 * period) r += period;
    return r;
}

} // namespace qca
