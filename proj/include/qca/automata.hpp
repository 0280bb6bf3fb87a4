#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "qca/common.hpp"
#include "qca/wavevector.hpp"

namespace qca {

enum class Model { Weyl1D, Weyl2D, Weyl3D, Dirac1D, Dirac2D, Dirac3D };
enum class Chirality { Plus, Minus };

inline bool is_dirac(Model m) {
    return m == Model::Dirac1D || m == Model::Dirac2D || m == Model::Dirac3D;
}

inline int model_dim(Model m) {
    switch (m) {
        case Model::Weyl1D:
        case Model::Dirac1D: return 1;
        case Model::Weyl2D:
        case Model::Dirac2D: return 2;
        default: return 3;
    }
}

inline int coin_dim(Model m) {
    return (m == Model::Dirac2D || m == Model::Dirac3D) ? 4 : 2;
}

inline std::string model_name(Model m) {
    switch (m) {
        case Model::Weyl1D: return "weyl1d";
        case Model::Weyl2D: return "weyl2d";
        case Model::Weyl3D: return "weyl3d";
        case Model::Dirac1D: return "dirac1d";
        case Model::Dirac2D: return "dirac2d";
        default: return "dirac3d";
    }
}

/// Which automaton to build. Mass enters only the Dirac models and obeys
/// n^2 + m^2 = 1 with n the hopping weight.
struct AutomatonSpec {
    Model model = Model::Dirac1D;
    double mass = 0.0;
    Chirality chirality = Chirality::Minus;

    AutomatonSpec() = default;
    AutomatonSpec(Model mo, double ma = 0.0, Chirality ch = Chirality::Minus)
        : model(mo), mass(ma), chirality(ch) {
        if (is_dirac(model)) {
            if (!(mass >= 0.0 && mass <= 1.0))
                throw ConfigError("mass: must lie in [0,1], got " + std::to_string(mass));
        } else if (mass != 0.0) {
            throw ConfigError("mass: Weyl models are massless");
        }
    }

    double n() const { return std::sqrt(1.0 - mass * mass); }
    int dim() const { return model_dim(model); }
    int internal_dim() const { return coin_dim(model); }
};

using Matrix = Eigen::MatrixXcd;
using Vector3 = Eigen::Vector3d;

/// The s x s unitary block acting on the internal components at fixed k.
struct CoinOperator {
    Matrix m;
    int dim() const { return static_cast<int>(m.rows()); }
};

/// Frobenius norm of M M^dag - I; upper-bounds the spectral-norm residual.
inline double unitarity_residual(const Matrix& m) {
    const Matrix r = m * m.adjoint() - Matrix::Identity(m.rows(), m.cols());
    return r.norm();
}

namespace detail {

inline Eigen::Matrix2cd pauli_dot(const Vector3& a) {
    Eigen::Matrix2cd s;
    s << cplx(a.z(), 0.0), cplx(a.x(), -a.y()),
         cplx(a.x(), a.y()), cplx(-a.z(), 0.0);
    return s;
}

} // namespace detail

/// Auxiliary vector functions of the 3D Weyl coin: the raw rotation vector
/// n_tilde, the scalar part d, the rotation angle lambda = arccos(d) and
/// the rescaled n = lambda * n_tilde / sin(lambda).
struct NVector {
    Vector3 n_tilde;
    double d = 1.0;
    double lambda = 0.0;
    Vector3 n;
    Chirality chirality = Chirality::Minus;
};

/// Evaluate the 3D half-angle trig functions and assemble the NVector.
/// Total on all k; lambda is clamped into [0,pi] against rounding and n is
/// continued by its limit value where sin(lambda) vanishes.
inline NVector n_vector(const WaveVector& k, Chirality chi = Chirality::Minus) {
    if (k.dim != 3) throw ConfigError("n_vector: wave-vector must be 3-dimensional");
    const double r3 = std::sqrt(3.0);
    const double cx = std::cos(k[0] / r3), sx = std::sin(k[0] / r3);
    const double cy = std::cos(k[1] / r3), sy = std::sin(k[1] / r3);
    const double cz = std::cos(k[2] / r3), sz = std::sin(k[2] / r3);
    const double sgn = (chi == Chirality::Plus) ? 1.0 : -1.0;

    NVector out;
    out.chirality = chi;
    // upper sign of the paper's -+/+- pattern is the + chirality
    out.n_tilde = Vector3(sx * cy * cz - sgn * cx * sy * sz,
                          -sgn * cx * sy * cz - sx * cy * sz,
                          cx * cy * sz - sgn * sx * sy * cz);
    out.d = cx * cy * cz + sgn * sx * sy * sz;
    out.lambda = std::acos(clamp_unit(out.d));

    const double sl = std::sin(out.lambda);
    if (sl > 1e-12) {
        out.n = out.lambda / sl * out.n_tilde;
    } else if (out.lambda < 1.0) {
        out.n = out.n_tilde; // lambda -> 0 limit
    } else {
        // lambda -> pi corner: |n_tilde| -> 0, only |n| = lambda is defined
        const double nt = out.n_tilde.norm();
        out.n = (nt > 0.0) ? Vector3(out.lambda / nt * out.n_tilde) : Vector3(out.lambda, 0.0, 0.0);
    }
    return out;
}

/// Scalar part and rotation vector of the 2D Weyl coin, in the rotated
/// coordinates kx = (k1+k2)/sqrt(2), ky = (k1-k2)/sqrt(2).
struct Weyl2DParts {
    Vector3 a;
    double d;
};

inline Weyl2DParts weyl2d_parts(const WaveVector& k) {
    if (k.dim != 2) throw ConfigError("weyl2d_parts: wave-vector must be 2-dimensional");
    const double r2 = std::sqrt(2.0);
    const double kx = (k[0] + k[1]) / r2;
    const double ky = (k[0] - k[1]) / r2;
    const double cx = std::cos(kx / r2), sx = std::sin(kx / r2);
    const double cy = std::cos(ky / r2), sy = std::sin(ky / r2);
    return {Vector3(sx * cy, cx * sy, sx * sy), cx * cy};
}

/// 2x2 Weyl coin: diag(e^{-ik}, e^{ik}) in 1D, d I - i a.sigma in 2D and
/// d I - i n_tilde.sigma in 3D (the -i convention that makes
/// d I - i n_tilde.sigma = exp[-i n.sigma] an SU(2) element).
inline CoinOperator weyl_coin(const WaveVector& k, const AutomatonSpec& spec) {
    if (is_dirac(spec.model)) throw ConfigError("weyl_coin: spec is not a Weyl model");
    if (spec.dim() != k.dim) throw ConfigError("weyl_coin: dimension mismatch between k and model");
    Eigen::Matrix2cd a;
    switch (spec.model) {
        case Model::Weyl1D:
            a << std::exp(-iu * k[0]), 0.0, 0.0, std::exp(iu * k[0]);
            break;
        case Model::Weyl2D: {
            const auto p = weyl2d_parts(k);
            a = p.d * Eigen::Matrix2cd::Identity() - iu * detail::pauli_dot(p.a);
            break;
        }
        default: {
            const auto nv = n_vector(k, spec.chirality);
            a = nv.d * Eigen::Matrix2cd::Identity() - iu * detail::pauli_dot(nv.n_tilde);
            break;
        }
    }
    return {a};
}

/// Dirac coin: two Weyl automata of the same dimension coupled by a mass
/// term, U = [[n A, i m],[i m, n A^dag]]; in 1D the Weyl block is the
/// scalar e^{-ik} and U is 2x2.
inline CoinOperator dirac_coin(const WaveVector& k, const AutomatonSpec& spec) {
    if (!is_dirac(spec.model)) throw ConfigError("dirac_coin: spec is not a Dirac model");
    if (spec.dim() != k.dim) throw ConfigError("dirac_coin: dimension mismatch between k and model");
    const double n = spec.n(), m = spec.mass;
    if (spec.model == Model::Dirac1D) {
        Eigen::Matrix2cd u;
        u << n * std::exp(-iu * k[0]), iu * m,
             iu * m, n * std::exp(iu * k[0]);
        return {u};
    }
    const AutomatonSpec weyl{spec.model == Model::Dirac2D ? Model::Weyl2D : Model::Weyl3D,
                             0.0, spec.chirality};
    const Matrix a = weyl_coin(k, weyl).m;
    Matrix u = Matrix::Zero(4, 4);
    u.block<2, 2>(0, 0) = n * a;
    u.block<2, 2>(2, 2) = n * a.adjoint();
    u.block<2, 2>(0, 2) = iu * m * Eigen::Matrix2cd::Identity();
    u.block<2, 2>(2, 0) = iu * m * Eigen::Matrix2cd::Identity();
    return {u};
}

inline CoinOperator coin(const WaveVector& k, const AutomatonSpec& spec) {
    return is_dirac(spec.model) ? dirac_coin(k, spec) : weyl_coin(k, spec);
}

/// Closed-form spectral data of a coin: every coin here is
/// cos(omega) I - i sin(omega) G with G Hermitian, G^2 = I, so powers,
/// the interpolating Hamiltonian and the branch projectors all follow
/// from (omega, G) without numerical diagonalization.
struct CoinSpectrum {
    double omega = 0.0;     // positive frequency, in [0, pi]
    double sin_omega = 0.0;
    int dim = 2;
    bool degenerate = false; // sin(omega) ~ 0: coin is +/-I, G undefined
    Matrix g;

    Matrix hamiltonian() const {
        if (degenerate) {
            // omega = 0 or pi: H = omega * I reproduces the coin
            return omega * Matrix::Identity(dim, dim);
        }
        return omega * g;
    }

    Matrix projector(int branch_sign) const {
        if (degenerate) throw PhysicsError("branch projector undefined at a band degeneracy (sin omega = 0)");
        return 0.5 * (Matrix::Identity(dim, dim) + static_cast<double>(branch_sign) * g);
    }

    /// coin^t for any real t.
    Matrix power(double t) const {
        if (degenerate) {
            const double s = (omega > 0.5 * pi) ? -1.0 : 1.0;
            const cplx ph = (s > 0) ? cplx(1, 0) : std::exp(-iu * pi * t);
            return ph * Matrix::Identity(dim, dim);
        }
        return std::cos(omega * t) * Matrix::Identity(dim, dim) - iu * std::sin(omega * t) * g;
    }
};

namespace detail {

inline CoinSpectrum su2_spectrum(double d, const Vector3& a) {
    CoinSpectrum s;
    s.dim = 2;
    s.sin_omega = a.norm();
    s.omega = std::atan2(s.sin_omega, d);
    if (s.sin_omega < 1e-12) {
        s.degenerate = true;
        s.omega = (d >= 0.0) ? 0.0 : pi;
        return s;
    }
    s.g = pauli_dot(a / s.sin_omega);
    return s;
}

} // namespace detail

/// Spectral data of the coin at k, by closed form.
inline CoinSpectrum coin_spectrum(const WaveVector& k, const AutomatonSpec& spec) {
    const double n = spec.n(), m = spec.mass;
    switch (spec.model) {
        case Model::Weyl1D:
            return detail::su2_spectrum(std::cos(k[0]), Vector3(0.0, 0.0, std::sin(k[0])));
        case Model::Weyl2D: {
            const auto p = weyl2d_parts(k);
            return detail::su2_spectrum(p.d, p.a);
        }
        case Model::Weyl3D: {
            const auto nv = n_vector(k, spec.chirality);
            return detail::su2_spectrum(nv.d, nv.n_tilde);
        }
        case Model::Dirac1D:
            return detail::su2_spectrum(n * std::cos(k[0]),
                                        Vector3(-m, 0.0, n * std::sin(k[0])));
        default: {
            // 4x4: U = n d I - i [[n nt.sigma, -m],[-m, -n nt.sigma]]
            Vector3 nt;
            double d;
            if (spec.model == Model::Dirac2D) {
                const auto p = weyl2d_parts(k);
                nt = p.a;
                d = p.d;
            } else {
                const auto nv = n_vector(k, spec.chirality);
                nt = nv.n_tilde;
                d = nv.d;
            }
            CoinSpectrum s;
            s.dim = 4;
            const double nd = n * d;
            s.sin_omega = std::sqrt(n * n * nt.squaredNorm() + m * m);
            s.omega = std::atan2(s.sin_omega, nd);
            if (s.sin_omega < 1e-12) {
                s.degenerate = true;
                s.omega = (nd >= 0.0) ? 0.0 : pi;
                return s;
            }
            const Eigen::Matrix2cd blk = detail::pauli_dot(n / s.sin_omega * nt);
            const double mm = m / s.sin_omega;
            s.g = Matrix::Zero(4, 4);
            s.g.block<2, 2>(0, 0) = blk;
            s.g.block<2, 2>(2, 2) = -blk;
            s.g.block<2, 2>(0, 2) = -mm * Eigen::Matrix2cd::Identity();
            s.g.block<2, 2>(2, 0) = -mm * Eigen::Matrix2cd::Identity();
            return s;
        }
    }
}

} // namespace qca
