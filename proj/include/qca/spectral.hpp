#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <vector>

#include "qca/automata.hpp"

namespace qca {

/// Hermitian generator H with coin = exp(-i H) and eigenvalues in (-pi, pi].
/// Particle states (positive omega) then evolve with phase e^{-i omega t}.
struct InterpolatingHamiltonian {
    Matrix h;
    int dim() const { return static_cast<int>(h.rows()); }
};

struct BranchEigenstate {
    int branch = +1;          // +1 particle, -1 antiparticle
    double omega = 0.0;       // signed eigenvalue of H
    Eigen::VectorXcd vector;
};

/// (omega, group velocity, diffusion tensor) of the positive branch at k.
struct DispersionPoint {
    double omega = 0.0;
    Eigen::VectorXd v;
    Eigen::MatrixXd d;
    int branch = +1;
    int degeneracy = 1;
};

namespace detail {

/// Eigen-decompose a unitary, sort by descending -arg(eigenvalue) in
/// (-pi, pi], and orthonormalize inside degenerate clusters by
/// Gram-Schmidt in the fixed input order, so output is deterministic.
inline std::vector<BranchEigenstate> unitary_log_decomposition(const Matrix& u, double tol = 1e-10) {
    if (unitarity_residual(u) > tol * 100)
        throw PhysicsError("interpolating hamiltonian: input coin is not unitary");
    Eigen::ComplexEigenSolver<Matrix> es(u);
    if (es.info() != Eigen::Success)
        throw PhysicsError("interpolating hamiltonian: eigen-decomposition failed");

    const int n = static_cast<int>(u.rows());
    std::vector<int> order(static_cast<size_t>(n));
    std::vector<double> omegas(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double w = -std::arg(es.eigenvalues()(i));
        if (w <= -pi) w += 2.0 * pi;
        omegas[static_cast<size_t>(i)] = w;
        order[static_cast<size_t>(i)] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return omegas[static_cast<size_t>(a)] > omegas[static_cast<size_t>(b)]; });

    std::vector<BranchEigenstate> out;
    out.reserve(static_cast<size_t>(n));
    for (int idx : order) {
        BranchEigenstate b;
        b.omega = omegas[static_cast<size_t>(idx)];
        b.branch = (b.omega >= 0.0) ? +1 : -1;
        b.vector = es.eigenvectors().col(idx);
        out.push_back(std::move(b));
    }
    // Gram-Schmidt inside clusters of equal omega
    for (size_t i = 0; i < out.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            if (std::abs(out[j].omega - out[i].omega) < 1e-9) {
                const cplx ov = out[j].vector.dot(out[i].vector);
                out[i].vector -= ov * out[j].vector;
            }
        }
        const double nn = out[i].vector.norm();
        if (nn < 1e-8) throw PhysicsError("eigenbranches: degenerate cluster collapsed in Gram-Schmidt");
        out[i].vector /= nn;
        // fix the global phase: largest-modulus component real positive
        int imax = 0;
        for (int r = 1; r < n; ++r)
            if (std::abs(out[i].vector(r)) > std::abs(out[i].vector(imax))) imax = r;
        const cplx ph = out[i].vector(imax) / std::abs(out[i].vector(imax));
        out[i].vector /= ph;
    }
    return out;
}

} // namespace detail

/// Full eigen-decomposition of a coin into branch eigenstates.
inline std::vector<BranchEigenstate> eigenbranches(const CoinOperator& c) {
    return detail::unitary_log_decomposition(c.m);
}

inline InterpolatingHamiltonian interpolating_hamiltonian(const CoinOperator& c) {
    const auto br = detail::unitary_log_decomposition(c.m);
    Matrix h = Matrix::Zero(c.m.rows(), c.m.cols());
    for (const auto& b : br) h += b.omega * (b.vector * b.vector.adjoint());
    const Matrix ha = h.adjoint();
    h = 0.5 * (h + ha); // hermitize rounding
    return {h};
}

/// Particle/antiparticle projectors (P+, P-) of a coin; requires a gapped
/// spectrum (no omega = 0 crossing).
inline std::pair<Matrix, Matrix> branch_projectors(const CoinOperator& c) {
    const auto br = detail::unitary_log_decomposition(c.m);
    const int n = c.dim();
    Matrix pp = Matrix::Zero(n, n), pm = Matrix::Zero(n, n);
    for (const auto& b : br) {
        if (std::abs(std::sin(b.omega)) < 1e-12)
            throw PhysicsError("branch projectors undefined at a band degeneracy");
        (b.branch > 0 ? pp : pm) += b.vector * b.vector.adjoint();
    }
    return {pp, pm};
}

/// Positive eigenvalue of H_k, by closed form: arccos(n d_k) with d_k the
/// scalar part of the underlying Weyl coin (n = 1 for Weyl models).
inline double dispersion(const AutomatonSpec& spec, const WaveVector& k) {
    return coin_spectrum(k, spec).omega;
}

/// Closed-form group velocity of the 1D Dirac automaton.
inline double dirac1d_group_velocity(double mass, double k) {
    const double n = std::sqrt(1.0 - mass * mass);
    const double s = std::sqrt(mass * mass + n * n * std::sin(k) * std::sin(k));
    if (s < 1e-14) throw PhysicsError("group velocity undefined at a band degeneracy");
    return n * std::sin(k) / s;
}

/// Closed-form dispersion curvature of the 1D Dirac automaton.
inline double dirac1d_diffusion(double mass, double k) {
    const double n = std::sqrt(1.0 - mass * mass);
    const double cw = n * std::cos(k);
    const double sw = std::sqrt(1.0 - cw * cw);
    if (sw < 1e-14) throw PhysicsError("diffusion undefined at a band degeneracy");
    return mass * mass * cw / (sw * sw * sw);
}

inline constexpr double fd_gradient_step = 1e-5;
inline constexpr double fd_hessian_step = 1e-3;

/// Drift vector: central finite difference of the dispersion, step 1e-5.
inline Eigen::VectorXd group_velocity(const AutomatonSpec& spec, const WaveVector& k) {
    const auto s0 = coin_spectrum(k, spec);
    if (s0.sin_omega < 1e-8)
        throw PhysicsError("group velocity undefined at a band degeneracy (omega = 0 or pi)");
    const int d = spec.dim();
    Eigen::VectorXd v(d);
    const double h = fd_gradient_step;
    for (int i = 0; i < d; ++i) {
        WaveVector kp = k, km = k;
        kp[i] += h;
        km[i] -= h;
        v(i) = (dispersion(spec, kp) - dispersion(spec, km)) / (2.0 * h);
    }
    return v;
}

/// Diffusion tensor: central finite-difference Hessian, step 1e-3.
inline Eigen::MatrixXd diffusion_tensor(const AutomatonSpec& spec, const WaveVector& k) {
    const auto s0 = coin_spectrum(k, spec);
    if (s0.sin_omega < 1e-8)
        throw PhysicsError("diffusion tensor undefined at a band degeneracy (omega = 0 or pi)");
    const int d = spec.dim();
    Eigen::MatrixXd dd(d, d);
    const double h = fd_hessian_step;
    const double w0 = dispersion(spec, k);
    for (int i = 0; i < d; ++i) {
        WaveVector kp = k, km = k;
        kp[i] += h;
        km[i] -= h;
        dd(i, i) = (dispersion(spec, kp) - 2.0 * w0 + dispersion(spec, km)) / (h * h);
        for (int j = i + 1; j < d; ++j) {
            WaveVector kpp = k, kpm = k, kmp = k, kmm = k;
            kpp[i] += h; kpp[j] += h;
            kpm[i] += h; kpm[j] -= h;
            kmp[i] -= h; kmp[j] += h;
            kmm[i] -= h; kmm[j] -= h;
            dd(i, j) = dd(j, i) = (dispersion(spec, kpp) - dispersion(spec, kpm)
                                   - dispersion(spec, kmp) + dispersion(spec, kmm)) / (4.0 * h * h);
        }
    }
    return dd;
}

/// omega, drift and diffusion of the positive branch at k.
inline DispersionPoint dispersion_point(const AutomatonSpec& spec, const WaveVector& k) {
    DispersionPoint p;
    p.omega = dispersion(spec, k);
    p.v = group_velocity(spec, k);
    p.d = diffusion_tensor(spec, k);
    p.branch = +1;
    p.degeneracy = spec.internal_dim() / 2;
    return p;
}

} // namespace qca
