#pragma once

#include <array>
#include <cstdint>

#include "qca/wavevector.hpp"

namespace qca {

/// Uniform periodic momentum grid, the discretization of the wave-vector
/// fundamental cell. For 1D and 2D the cell is (-pi, pi] per axis, which
/// is conjugate to integer lattice positions under the standard DFT; 3D
/// grids (period 2 sqrt(3) pi per axis) are used for scans only.
struct MomentumGrid {
    int dimension = 1;
    int points_per_axis = 0;

    MomentumGrid() = default;
    MomentumGrid(int dim, int n) : dimension(dim), points_per_axis(n) {
        if (dim < 1 || dim > 3) throw ConfigError("grid: dimension must be 1, 2 or 3");
        if (n < 2 || (n & 1)) throw ConfigError("grid: points per axis must be even and >= 2");
    }

    int64_t total_points() const {
        int64_t t = 1;
        for (int i = 0; i < dimension; ++i) t *= points_per_axis;
        return t;
    }

    double spacing() const { return WaveVector::axis_period(dimension) / points_per_axis; }

    /// Signed frequency of an FFT-ordered axis index.
    int freq(int idx) const { return idx < points_per_axis / 2 ? idx : idx - points_per_axis; }

    double axis_k(int idx) const { return spacing() * freq(idx); }

    /// Wave-vector of a flattened grid index (row-major, axis 0 slowest).
    WaveVector k_of(int64_t flat) const {
        WaveVector k;
        k.dim = dimension;
        for (int a = dimension - 1; a >= 0; --a) {
            k[a] = axis_k(static_cast<int>(flat % points_per_axis));
            flat /= points_per_axis;
        }
        return k;
    }

    bool operator==(const MomentumGrid&) const = default;
};

} // namespace qca
