#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qca/automata.hpp"
#include "qca/spectral.hpp"
#include "qca/state.hpp"

namespace qca {

/// Narrowband packet: Gaussian (or Hermite-modulated Gaussian) envelope
/// g(k) around k0 with branch weights c+ and c-. sigma is the wave-vector
/// standard deviation of |g|^2 for the plain Gaussian.
struct PacketSpec {
    WaveVector k0;
    double sigma = 0.025;
    cplx cplus{1.0, 0.0};
    cplx cminus{0.0, 0.0};
    std::vector<cplx> hermite{cplx(1.0, 0.0)}; // coefficients of H_j, j = 0,1,...
};

namespace detail {

inline double hermite_poly(int j, double x) {
    double h0 = 1.0, h1 = 2.0 * x;
    if (j == 0) return h0;
    if (j == 1) return h1;
    for (int i = 2; i <= j; ++i) {
        const double h2 = 2.0 * x * h1 - 2.0 * (i - 1) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

inline cplx envelope_1d(const PacketSpec& p, double dk) {
    const double g = std::exp(-dk * dk / (4.0 * p.sigma * p.sigma));
    cplx h(0, 0);
    for (size_t j = 0; j < p.hermite.size(); ++j)
        h += p.hermite[j] * hermite_poly(static_cast<int>(j), dk / (p.sigma * std::sqrt(2.0)));
    return h * g;
}

/// Smooth deterministic branch spinor: the normalized projection of a
/// fixed reference spinor onto the branch subspace.
inline Eigen::VectorXcd branch_spinor(const CoinSpectrum& s, int sign) {
    const Matrix p = s.projector(sign);
    for (int r = 0; r < s.dim; ++r) {
        Eigen::VectorXcd v = p.col(r);
        const double n = v.norm();
        if (n > 1e-6) return v / n;
    }
    throw PhysicsError("branch spinor: projector has no usable column");
}

} // namespace detail

/// Per-mode spectral data of an automaton on a grid; the coin at mode i is
/// cos(omega_i) I - i sin(omega_i) G_i.
struct EvolutionTable {
    MomentumGrid grid;
    int components = 2;
    std::vector<double> omega;
    std::vector<uint8_t> degenerate;
    std::vector<double> axis;               // 2-component case: unit a-hat, 3 per mode
    std::vector<Eigen::Matrix4cd> g4;       // 4-component case

    static EvolutionTable make(const MomentumGrid& grid, const AutomatonSpec& spec) {
        if (grid.dimension != spec.dim())
            throw ConfigError("evolution table: grid and model dimension differ");
        EvolutionTable t;
        t.grid = grid;
        t.components = spec.internal_dim();
        const int64_t n = grid.total_points();
        t.omega.resize(static_cast<size_t>(n));
        t.degenerate.resize(static_cast<size_t>(n));
        if (t.components == 2) t.axis.resize(static_cast<size_t>(3 * n));
        else t.g4.resize(static_cast<size_t>(n));
        for (int64_t i = 0; i < n; ++i) {
            const auto s = coin_spectrum(grid.k_of(i), spec);
            t.omega[static_cast<size_t>(i)] = s.omega;
            t.degenerate[static_cast<size_t>(i)] = s.degenerate ? 1 : 0;
            if (s.degenerate) continue;
            if (t.components == 2) {
                // G = a.sigma with unit a: recover a from the Pauli expansion
                t.axis[static_cast<size_t>(3 * i) + 0] = s.g(1, 0).real();
                t.axis[static_cast<size_t>(3 * i) + 1] = s.g(1, 0).imag();
                t.axis[static_cast<size_t>(3 * i) + 2] = s.g(0, 0).real();
            } else {
                t.g4[static_cast<size_t>(i)] = s.g;
            }
        }
        return t;
    }

    CoinSpectrum spectrum_at(int64_t i) const {
        CoinSpectrum s;
        s.dim = components;
        s.omega = omega[static_cast<size_t>(i)];
        s.sin_omega = std::sin(s.omega);
        s.degenerate = degenerate[static_cast<size_t>(i)] != 0;
        if (s.degenerate) return s;
        if (components == 2) {
            s.g = detail::pauli_dot(Vector3(axis[static_cast<size_t>(3 * i)],
                                            axis[static_cast<size_t>(3 * i) + 1],
                                            axis[static_cast<size_t>(3 * i) + 2]));
        } else {
            s.g = g4[static_cast<size_t>(i)];
        }
        return s;
    }
};

/// Build the momentum-representation packet sum_k g(k) (c+ u+ + c- u-) |k>,
/// normalized on the grid. Rejects envelopes that are not negligible at
/// the fundamental-cell boundary.
inline LatticeState make_packet(const PacketSpec& p, const MomentumGrid& grid,
                                const AutomatonSpec& spec) {
    const double wnorm = std::sqrt(std::norm(p.cplus) + std::norm(p.cminus));
    if (std::abs(wnorm - 1.0) > 1e-9)
        throw ConfigError("packet: branch weights must satisfy |c+|^2 + |c-|^2 = 1");
    if (p.sigma <= 0) throw ConfigError("packet: sigma must be positive");
    if (p.k0.dim != grid.dimension) throw ConfigError("packet: k0 dimension does not match grid");

    auto state = LatticeState::zero(grid, spec.internal_dim(), Representation::Momentum);
    const double period = WaveVector::axis_period(grid.dimension);
    const int nax = grid.points_per_axis;
    const int64_t npts = grid.total_points();

    std::vector<cplx> env(static_cast<size_t>(npts));
    double max_env = 0.0, boundary_env = 0.0;
    for (int64_t i = 0; i < npts; ++i) {
        const auto k = grid.k_of(i);
        cplx g(1.0, 0.0);
        bool on_boundary = false;
        int64_t rem = i;
        for (int a = grid.dimension - 1; a >= 0; --a) {
            if (static_cast<int>(rem % nax) == nax / 2) on_boundary = true;
            rem /= nax;
            g *= detail::envelope_1d(p, reduce_periodic(k[a] - p.k0[a], period));
        }
        env[static_cast<size_t>(i)] = g;
        const double mag = std::abs(g);
        max_env = std::max(max_env, mag);
        if (on_boundary) boundary_env = std::max(boundary_env, mag);
    }
    if (max_env == 0.0) throw ConfigError("packet: envelope vanishes on the whole grid");
    if (boundary_env > 1e-12 * max_env)
        throw ConfigError("packet: sigma too large, envelope not negligible at the cell boundary");

    for (int64_t i = 0; i < npts; ++i) {
        const cplx g = env[static_cast<size_t>(i)];
        if (std::abs(g) < 1e-15 * max_env) continue;
        const auto s = coin_spectrum(grid.k_of(i), spec);
        if (s.degenerate) {
            if (std::abs(g) > 1e-12 * max_env)
                throw PhysicsError("packet: envelope overlaps a band degeneracy");
            continue;
        }
        Eigen::VectorXcd spinor = Eigen::VectorXcd::Zero(s.dim);
        if (p.cplus != cplx(0, 0)) spinor += p.cplus * detail::branch_spinor(s, +1);
        if (p.cminus != cplx(0, 0)) spinor += p.cminus * detail::branch_spinor(s, -1);
        for (int c = 0; c < s.dim; ++c) state.at(i, c) = g * spinor(c);
    }
    state.normalize();
    return state;
}

/// Exact evolution by t steps (t may be negative): per-mode application of
/// coin^t through the closed-form phases e^{-/+ i omega t}.
inline LatticeState evolve_exact(const LatticeState& state, int64_t t, const EvolutionTable& tab) {
    const bool was_position = (state.rep == Representation::Position);
    LatticeState s = was_position ? to_momentum(state) : state;
    if (s.components != tab.components || !(s.grid == tab.grid))
        throw PhysicsError("evolve: state and table shapes differ");
    const double td = static_cast<double>(t);

    const int64_t n = s.grid.total_points();
    if (tab.components == 2) {
        for (int64_t i = 0; i < n; ++i) {
            const double w = tab.omega[static_cast<size_t>(i)];
            const cplx v0 = s.at(i, 0), v1 = s.at(i, 1);
            if (tab.degenerate[static_cast<size_t>(i)]) {
                const cplx ph = (w > 0.5 * pi) ? std::exp(-iu * pi * td) : cplx(1, 0);
                s.at(i, 0) = ph * v0;
                s.at(i, 1) = ph * v1;
                continue;
            }
            const double c = std::cos(w * td), sn = std::sin(w * td);
            const double ax = tab.axis[static_cast<size_t>(3 * i)];
            const double ay = tab.axis[static_cast<size_t>(3 * i) + 1];
            const double az = tab.axis[static_cast<size_t>(3 * i) + 2];
            const cplx g0 = az * v0 + cplx(ax, -ay) * v1;
            const cplx g1 = cplx(ax, ay) * v0 - az * v1;
            s.at(i, 0) = c * v0 - iu * sn * g0;
            s.at(i, 1) = c * v1 - iu * sn * g1;
        }
    } else {
        for (int64_t i = 0; i < n; ++i) {
            Eigen::Vector4cd v;
            for (int c = 0; c < 4; ++c) v(c) = s.at(i, c);
            const double w = tab.omega[static_cast<size_t>(i)];
            if (tab.degenerate[static_cast<size_t>(i)]) {
                const cplx ph = (w > 0.5 * pi) ? std::exp(-iu * pi * td) : cplx(1, 0);
                v *= ph;
            } else {
                const double c = std::cos(w * td), sn = std::sin(w * td);
                v = c * v - iu * sn * (tab.g4[static_cast<size_t>(i)] * v).eval();
            }
            for (int c = 0; c < 4; ++c) s.at(i, c) = v(c);
        }
    }
    s.step += t;
    return was_position ? to_position(s) : s;
}

inline LatticeState evolve_exact(const LatticeState& state, int64_t t, const AutomatonSpec& spec) {
    return evolve_exact(state, t, EvolutionTable::make(state.grid, spec));
}

/// Project onto the particle (+1) or antiparticle (-1) branch, mode by
/// mode. Degenerate modes must carry no amplitude.
inline LatticeState project_branch(const LatticeState& state, int sign, const EvolutionTable& tab) {
    LatticeState s = (state.rep == Representation::Position) ? to_momentum(state) : state;
    const int64_t n = s.grid.total_points();
    const double sg = static_cast<double>(sign);
    if (tab.components == 2) {
        for (int64_t i = 0; i < n; ++i) {
            const cplx v0 = s.at(i, 0), v1 = s.at(i, 1);
            if (tab.degenerate[static_cast<size_t>(i)]) {
                if (std::abs(v0) + std::abs(v1) > 1e-10)
                    throw PhysicsError("branch projection: amplitude on a degenerate mode");
                s.at(i, 0) = s.at(i, 1) = cplx(0, 0);
                continue;
            }
            const double ax = tab.axis[static_cast<size_t>(3 * i)];
            const double ay = tab.axis[static_cast<size_t>(3 * i) + 1];
            const double az = tab.axis[static_cast<size_t>(3 * i) + 2];
            const cplx g0 = az * v0 + cplx(ax, -ay) * v1;
            const cplx g1 = cplx(ax, ay) * v0 - az * v1;
            s.at(i, 0) = 0.5 * (v0 + sg * g0);
            s.at(i, 1) = 0.5 * (v1 + sg * g1);
        }
    } else {
        for (int64_t i = 0; i < n; ++i) {
            Eigen::Vector4cd v;
            for (int c = 0; c < 4; ++c) v(c) = s.at(i, c);
            if (tab.degenerate[static_cast<size_t>(i)]) {
                if (v.norm() > 1e-10)
                    throw PhysicsError("branch projection: amplitude on a degenerate mode");
                for (int c = 0; c < 4; ++c) s.at(i, c) = cplx(0, 0);
                continue;
            }
            v = 0.5 * (v + sg * (tab.g4[static_cast<size_t>(i)] * v).eval());
            for (int c = 0; c < 4; ++c) s.at(i, c) = v(c);
        }
    }
    return s;
}

/// Multiply by the plane-wave phase that recenters a momentum packet at
/// position x0.
inline LatticeState recenter(const LatticeState& state, const Eigen::VectorXd& x0) {
    if (state.rep != Representation::Momentum)
        throw PhysicsError("recenter expects a momentum-representation state");
    LatticeState s = state;
    for (int64_t i = 0; i < s.grid.total_points(); ++i) {
        const auto k = s.grid.k_of(i);
        double phase = 0;
        for (int a = 0; a < s.grid.dimension; ++a) phase += k[a] * x0(a);
        const cplx ph = std::exp(-iu * phase);
        for (int c = 0; c < s.components; ++c) s.at(i, c) *= ph;
    }
    return s;
}

} // namespace qca
