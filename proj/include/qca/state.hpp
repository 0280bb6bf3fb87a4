#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <numeric>
#include <vector>

#include "qca/fft.hpp"
#include "qca/grid.hpp"

namespace qca {

enum class Representation { Position, Momentum };

/// Normalized one-particle wavefunction over a finite periodic lattice
/// times the internal components. Amplitudes are stored row-major over
/// grid points with the internal index fastest. States are immutable
/// values as far as the operations below are concerned: they return new
/// states.
struct LatticeState {
    MomentumGrid grid;
    int components = 2;
    Representation rep = Representation::Momentum;
    int64_t step = 0;
    std::vector<cplx> amp;

    static LatticeState zero(const MomentumGrid& g, int comps, Representation r) {
        LatticeState s;
        s.grid = g;
        s.components = comps;
        s.rep = r;
        s.amp.assign(static_cast<size_t>(g.total_points()) * static_cast<size_t>(comps), cplx(0, 0));
        return s;
    }

    cplx& at(int64_t point, int comp) {
        return amp[static_cast<size_t>(point) * static_cast<size_t>(components) + static_cast<size_t>(comp)];
    }
    cplx at(int64_t point, int comp) const {
        return amp[static_cast<size_t>(point) * static_cast<size_t>(components) + static_cast<size_t>(comp)];
    }

    double norm2() const {
        double s = 0;
        for (const auto& z : amp) s += std::norm(z);
        return s;
    }
    double norm() const { return std::sqrt(norm2()); }

    void normalize() {
        const double n = norm();
        if (n == 0.0) throw PhysicsError("state: cannot normalize the zero state");
        for (auto& z : amp) z /= n;
    }
};

inline cplx inner(const LatticeState& a, const LatticeState& b) {
    if (a.amp.size() != b.amp.size()) throw PhysicsError("inner: state shapes differ");
    cplx s(0, 0);
    for (size_t i = 0; i < a.amp.size(); ++i) s += std::conj(a.amp[i]) * b.amp[i];
    return s;
}

inline std::vector<int> fft_dims(const MomentumGrid& g) {
    return std::vector<int>(static_cast<size_t>(g.dimension), g.points_per_axis);
}

/// Unitary DFT to position representation:
/// psi(x) = N^{-d/2} sum_k psi(k) e^{+i k.x}.
inline LatticeState to_position(const LatticeState& s) {
    if (s.grid.dimension == 3)
        throw PhysicsError("to_position: 3D position-space states are not supported");
    if (s.rep == Representation::Position) return s;
    LatticeState r = s;
    detail::dft_inplace(r.amp, fft_dims(r.grid), r.components, FFTW_BACKWARD);
    r.rep = Representation::Position;
    return r;
}

/// Inverse of to_position.
inline LatticeState to_momentum(const LatticeState& s) {
    if (s.grid.dimension == 3)
        throw PhysicsError("to_momentum: 3D position-space states are not supported");
    if (s.rep == Representation::Momentum) return s;
    LatticeState r = s;
    detail::dft_inplace(r.amp, fft_dims(r.grid), r.components, FFTW_FORWARD);
    r.rep = Representation::Momentum;
    return r;
}

/// Site probabilities, summed over internal components.
inline std::vector<double> position_probabilities(const LatticeState& s) {
    if (s.rep != Representation::Position)
        throw PhysicsError("position statistics require the position representation");
    std::vector<double> p(static_cast<size_t>(s.grid.total_points()), 0.0);
    for (int64_t x = 0; x < s.grid.total_points(); ++x)
        for (int c = 0; c < s.components; ++c) p[static_cast<size_t>(x)] += std::norm(s.at(x, c));
    return p;
}

namespace detail {

/// Circular center of mass of a periodic probability distribution along
/// one axis, in [0, N).
inline double circular_center(const std::vector<double>& p, const MomentumGrid& g, int axis) {
    const int n = g.points_per_axis;
    double cs = 0, sn = 0;
    for (int64_t x = 0; x < g.total_points(); ++x) {
        int64_t rem = x;
        for (int a = g.dimension - 1; a > axis; --a) rem /= n;
        const int xa = static_cast<int>(rem % n);
        const double th = 2.0 * pi * xa / n;
        cs += p[static_cast<size_t>(x)] * std::cos(th);
        sn += p[static_cast<size_t>(x)] * std::sin(th);
    }
    const double c = std::atan2(sn, cs) / (2.0 * pi) * n;
    return c < 0 ? c + n : c;
}

inline double wrap_offset(double dx, int n) {
    double r = dx - n * std::floor(dx / n + 0.5);
    if (r < -0.5 * n) r += n;
    return r;
}

} // namespace detail

/// Mean position per axis, unwrapped around the packet's circular center
/// so that periodic wrap-around does not bias the estimate. Rejects
/// states whose mass is not concentrated within half the lattice.
inline Eigen::VectorXd position_mean(const LatticeState& s) {
    const auto p = position_probabilities(s);
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    const int n = s.grid.points_per_axis;
    Eigen::VectorXd mean(s.grid.dimension);
    for (int a = 0; a < s.grid.dimension; ++a) {
        const double c = detail::circular_center(p, s.grid, a);
        double acc = 0, far = 0;
        for (int64_t x = 0; x < s.grid.total_points(); ++x) {
            int64_t rem = x;
            for (int b = s.grid.dimension - 1; b > a; --b) rem /= n;
            const double dx = detail::wrap_offset(static_cast<double>(rem % n) - c, n);
            acc += p[static_cast<size_t>(x)] * dx;
            if (std::abs(dx) > 0.25 * n) far += p[static_cast<size_t>(x)];
        }
        if (far / total > 1e-6)
            throw PhysicsError("position mean: packet wider than half the lattice, unwrapping invalid");
        mean(a) = c + acc / total;
    }
    return mean;
}

/// Total position variance <X^2> - <X>^2, summed over axes, with the same
/// unwrapping as position_mean.
inline double position_variance(const LatticeState& s) {
    const auto p = position_probabilities(s);
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    const int n = s.grid.points_per_axis;
    double var = 0;
    for (int a = 0; a < s.grid.dimension; ++a) {
        const double c = detail::circular_center(p, s.grid, a);
        double m1 = 0, m2 = 0;
        for (int64_t x = 0; x < s.grid.total_points(); ++x) {
            int64_t rem = x;
            for (int b = s.grid.dimension - 1; b > a; --b) rem /= n;
            const double dx = detail::wrap_offset(static_cast<double>(rem % n) - c, n);
            m1 += p[static_cast<size_t>(x)] * dx;
            m2 += p[static_cast<size_t>(x)] * dx * dx;
        }
        m1 /= total;
        m2 /= total;
        var += m2 - m1 * m1;
    }
    return var;
}

/// Cross expectation 2 Re <a| X_axis |b> of two position-representation
/// states, with coordinates unwrapped around `center`.
inline double cross_position_expectation(const LatticeState& a, const LatticeState& b,
                                         double center, int axis = 0) {
    if (a.rep != Representation::Position || b.rep != Representation::Position)
        throw PhysicsError("cross expectation requires position representation");
    const int n = a.grid.points_per_axis;
    cplx acc(0, 0);
    for (int64_t x = 0; x < a.grid.total_points(); ++x) {
        int64_t rem = x;
        for (int bx = a.grid.dimension - 1; bx > axis; --bx) rem /= n;
        const double xa = center + detail::wrap_offset(static_cast<double>(rem % n) - center, n);
        cplx site(0, 0);
        for (int c = 0; c < a.components; ++c) site += std::conj(a.at(x, c)) * b.at(x, c);
        acc += xa * site;
    }
    return 2.0 * acc.real();
}

/// Translate a position-representation state by an integer site offset.
inline LatticeState translate(const LatticeState& s, int64_t offset, int axis = 0) {
    if (s.rep != Representation::Position) throw PhysicsError("translate requires position representation");
    LatticeState r = s;
    const int n = s.grid.points_per_axis;
    for (int64_t x = 0; x < s.grid.total_points(); ++x) {
        int64_t rem = x, lower = 1;
        for (int b = s.grid.dimension - 1; b > axis; --b) { rem /= n; lower *= n; }
        const int xa = static_cast<int>(rem % n);
        const int src = static_cast<int>(((xa - offset) % n + n) % n);
        const int64_t xsrc = x + (src - xa) * lower;
        for (int c = 0; c < s.components; ++c) r.at(x, c) = s.at(xsrc, c);
    }
    return r;
}

} // namespace qca
