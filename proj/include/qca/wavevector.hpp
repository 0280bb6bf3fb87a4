#pragma once

#include <array>
#include <cmath>

#include "qca/common.hpp"

namespace qca {

/// Point of the wave-vector fundamental domain, in dimensionless Planck
/// units. Components are stored in the lattice coordinates the automaton
/// formulas use: k in 1D, (k1,k2) in 2D, (kx,ky,kz) in 3D.
///
/// Periodicity of the fundamental cell:
///   1D: 2*pi.
///   2D: 2*pi per (k1,k2) axis. The half-angle sine/cosine factors flip
///       sign individually under a 2*pi shift but every coin entry is a
///       product of two of them, so the coin itself is 2*pi periodic.
///   3D: 2*sqrt(3)*pi per axis, the period of cos(k_a/sqrt(3)).
struct WaveVector {
    int dim = 1;
    std::array<double, 3> c{0.0, 0.0, 0.0};

    static WaveVector one(double k) { return {1, {k, 0.0, 0.0}}; }
    static WaveVector two(double k1, double k2) { return {2, {k1, k2, 0.0}}; }
    static WaveVector three(double kx, double ky, double kz) { return {3, {kx, ky, kz}}; }

    double operator[](int i) const { return c[static_cast<size_t>(i)]; }
    double& operator[](int i) { return c[static_cast<size_t>(i)]; }

    double norm() const {
        return std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    }

    static double axis_period(int dim) {
        switch (dim) {
            case 1:
            case 2: return 2.0 * pi;
            default: return 2.0 * std::sqrt(3.0) * pi;
        }
    }

    WaveVector reduced() const {
        WaveVector r = *this;
        const double p = axis_period(dim);
        for (int i = 0; i < dim; ++i) r.c[static_cast<size_t>(i)] = reduce_periodic(r.c[static_cast<size_t>(i)], p);
        return r;
    }

    WaveVector scaled(double s) const {
        return {dim, {c[0] * s, c[1] * s, c[2] * s}};
    }
};

} // namespace qca
