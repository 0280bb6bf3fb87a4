#include <catch2/catch_amalgamated.hpp>

#include "qca/automata.hpp"
#include "oracles.hpp"

using namespace qca;
using Catch::Approx;

TEST_CASE("n_vector at k = 0") {
    for (auto chi : {Chirality::Plus, Chirality::Minus}) {
        const auto nv = n_vector(WaveVector::three(0, 0, 0), chi);
        CHECK(nv.n_tilde.norm() == 0.0);
        CHECK(nv.d == 1.0);
        CHECK(nv.lambda == 0.0);
        CHECK(nv.n.norm() == 0.0);
    }
}

TEST_CASE("n_vector at k = (sqrt(3) pi/2, 0, 0), chirality minus") {
    const double kx = std::sqrt(3.0) * pi / 2.0;
    const auto nv = n_vector(WaveVector::three(kx, 0, 0), Chirality::Minus);
    CHECK(nv.n_tilde.x() == Approx(1.0).margin(1e-12));
    CHECK(nv.n_tilde.y() == Approx(0.0).margin(1e-12));
    CHECK(nv.n_tilde.z() == Approx(0.0).margin(1e-12));
    CHECK(nv.d == Approx(0.0).margin(1e-12));
    CHECK(nv.lambda == Approx(pi / 2.0).margin(1e-12));
    CHECK(nv.n.x() == Approx(pi / 2.0).margin(1e-12));
}

TEST_CASE("n_vector unitarity identity d^2 + |n_tilde|^2 = 1") {
    auto gen = oracle::rng(11);
    for (int i = 0; i < 2000; ++i) {
        const auto k = oracle::random_wavevector(gen, 3);
        for (auto chi : {Chirality::Plus, Chirality::Minus}) {
            const auto nv = n_vector(k, chi);
            CHECK(nv.d * nv.d + nv.n_tilde.squaredNorm() == Approx(1.0).margin(1e-12));
            // n = lambda * unit(n_tilde) wherever sin(lambda) is nonzero
            if (std::sin(nv.lambda) > 1e-6)
                CHECK(nv.n.norm() == Approx(nv.lambda).margin(1e-9));
        }
    }
}

TEST_CASE("coins reduce to the identity at k = 0") {
    CHECK((weyl_coin(WaveVector::one(0), {Model::Weyl1D}).m
           - Matrix::Identity(2, 2)).norm() == Approx(0.0).margin(1e-15));
    CHECK((weyl_coin(WaveVector::two(0, 0), {Model::Weyl2D}).m
           - Matrix::Identity(2, 2)).norm() == Approx(0.0).margin(1e-15));
    CHECK((weyl_coin(WaveVector::three(0, 0, 0), {Model::Weyl3D}).m
           - Matrix::Identity(2, 2)).norm() == Approx(0.0).margin(1e-15));
    // massless Dirac coin at k = 0 is the identity as well
    CHECK((dirac_coin(WaveVector::three(0, 0, 0), {Model::Dirac3D, 0.0}).m
           - Matrix::Identity(4, 4)).norm() == Approx(0.0).margin(1e-15));
}

TEST_CASE("1D Weyl coin is the diagonal phase pair") {
    const double k = 0.7;
    const auto a = weyl_coin(WaveVector::one(k), {Model::Weyl1D}).m;
    CHECK(std::abs(a(0, 0) - std::exp(-iu * k)) < 1e-15);
    CHECK(std::abs(a(1, 1) - std::exp(iu * k)) < 1e-15);
    CHECK(std::abs(a(0, 1)) == 0.0);
    CHECK(std::abs(a(1, 0)) == 0.0);
}

TEST_CASE("2D Weyl coin against independent entry evaluation") {
    const double v = std::sqrt(2.0) * pi / 2.0;
    for (auto kv : {WaveVector::two(v, v), WaveVector::two(0.3, -1.2), WaveVector::two(2.0, 0.4)}) {
        const auto a = weyl_coin(kv, {Model::Weyl2D}).m;
        // independent evaluation in the rotated coordinates
        const double kx = (kv[0] + kv[1]) / std::sqrt(2.0);
        const double ky = (kv[0] - kv[1]) / std::sqrt(2.0);
        const double cx = std::cos(kx / std::sqrt(2.0)), sx = std::sin(kx / std::sqrt(2.0));
        const double cy = std::cos(ky / std::sqrt(2.0)), sy = std::sin(ky / std::sqrt(2.0));
        Matrix e(2, 2);
        e(0, 0) = cplx(cx * cy, -sx * sy);
        e(0, 1) = cplx(-cx * sy, -sx * cy);
        e(1, 0) = cplx(cx * sy, -sx * cy);
        e(1, 1) = cplx(cx * cy, sx * sy);
        CHECK((a - e).norm() < 1e-14);
        CHECK(unitarity_residual(a) < 1e-14);
    }
}

TEST_CASE("3D Weyl coin against independent entry evaluation") {
    auto gen = oracle::rng(23);
    for (int i = 0; i < 200; ++i) {
        const auto k = oracle::random_wavevector(gen, 3);
        for (auto chi : {Chirality::Plus, Chirality::Minus}) {
            const auto a = weyl_coin(k, {Model::Weyl3D, 0.0, chi}).m;
            CHECK((a - oracle::weyl3d_coin_direct(k, chi)).norm() < 1e-14);
        }
    }
}

TEST_CASE("Dirac coin structure") {
    SECTION("m = 0 decouples into the Weyl pair") {
        auto gen = oracle::rng(31);
        const auto k = oracle::random_wavevector(gen, 3);
        const auto u = dirac_coin(k, {Model::Dirac3D, 0.0}).m;
        const auto a = weyl_coin(k, {Model::Weyl3D}).m;
        CHECK((u.block<2, 2>(0, 0) - a).norm() < 1e-14);
        CHECK((u.block<2, 2>(2, 2) - a.adjoint()).norm() < 1e-14);
        CHECK(u.block<2, 2>(0, 2).norm() == 0.0);
        CHECK(unitarity_residual(u) < 1e-13);
    }
    SECTION("1D, m = 1 is the pure mass coupling") {
        const auto u = dirac_coin(WaveVector::one(1.234), {Model::Dirac1D, 1.0}).m;
        CHECK(std::abs(u(0, 0)) == 0.0);
        CHECK(std::abs(u(0, 1) - iu) < 1e-15);
        CHECK(std::abs(u(1, 0) - iu) < 1e-15);
        CHECK(std::abs(u(1, 1)) == 0.0);
    }
    SECTION("1D, m = 0.6, k = pi/3 by direct entries") {
        const double k = pi / 3.0, m = 0.6, n = 0.8;
        const auto u = dirac_coin(WaveVector::one(k), {Model::Dirac1D, m}).m;
        CHECK(std::abs(u(0, 0) - n * std::exp(-iu * k)) < 1e-15);
        CHECK(std::abs(u(0, 1) - iu * m) < 1e-15);
        CHECK(std::abs(u(1, 0) - iu * m) < 1e-15);
        CHECK(std::abs(u(1, 1) - n * std::exp(iu * k)) < 1e-15);
        CHECK(unitarity_residual(u) < 1e-12);
    }
}

TEST_CASE("coin unitarity over random wave-vectors, all models") {
    auto gen = oracle::rng(47);
    const AutomatonSpec specs[] = {
        {Model::Weyl1D}, {Model::Weyl2D}, {Model::Weyl3D},
        {Model::Weyl3D, 0.0, Chirality::Plus},
        {Model::Dirac1D, 0.37}, {Model::Dirac2D, 0.8}, {Model::Dirac3D, 0.15}};
    for (const auto& spec : specs) {
        for (int i = 0; i < 500; ++i) {
            const auto k = oracle::random_wavevector(gen, spec.dim());
            CHECK(unitarity_residual(coin(k, spec).m) < 1e-12);
        }
    }
}

TEST_CASE("Weyl coins have unit determinant") {
    auto gen = oracle::rng(59);
    for (auto model : {Model::Weyl2D, Model::Weyl3D}) {
        for (int i = 0; i < 200; ++i) {
            const auto k = oracle::random_wavevector(gen, model_dim(model));
            const cplx det = weyl_coin(k, {model}).m.determinant();
            CHECK(std::abs(det - 1.0) < 1e-13);
        }
    }
}

TEST_CASE("coin spectrum reproduces the coin") {
    auto gen = oracle::rng(61);
    const AutomatonSpec specs[] = {
        {Model::Weyl1D}, {Model::Weyl2D}, {Model::Weyl3D},
        {Model::Dirac1D, 0.15}, {Model::Dirac2D, 0.4}, {Model::Dirac3D, 0.6}};
    for (const auto& spec : specs) {
        for (int i = 0; i < 200; ++i) {
            const auto k = oracle::random_wavevector(gen, spec.dim());
            const auto s = coin_spectrum(k, spec);
            REQUIRE(!s.degenerate);
            CHECK((s.power(1.0) - coin(k, spec).m).norm() < 1e-12);
            // G is a Hermitian involution
            CHECK((s.g - s.g.adjoint()).norm() < 1e-13);
            CHECK((s.g * s.g - Matrix::Identity(s.dim, s.dim)).norm() < 1e-12);
        }
    }
}

TEST_CASE("mass constraint n^2 + m^2 = 1") {
    const AutomatonSpec s{Model::Dirac1D, 0.3};
    CHECK(s.n() * s.n() + s.mass * s.mass == Approx(1.0).margin(1e-15));
    CHECK_THROWS_AS((AutomatonSpec{Model::Dirac1D, 1.5}), ConfigError);
    CHECK_THROWS_AS((AutomatonSpec{Model::Dirac1D, -0.1}), ConfigError);
}

TEST_CASE("wave-vector reduction lands in the fundamental cell") {
    const auto k = WaveVector::one(7.0).reduced();
    CHECK(k[0] == Approx(7.0 - 2.0 * pi));
    const auto k3 = WaveVector::three(4.0 * std::sqrt(3.0) * pi + 0.2, -0.1, 0.0).reduced();
    CHECK(k3[0] == Approx(0.2).margin(1e-12));
    // reduction does not change any coin
    const AutomatonSpec spec{Model::Dirac3D, 0.35};
    const auto kk = WaveVector::three(1.1, -2.0, 0.7);
    const auto shifted = WaveVector::three(kk[0] + 2.0 * std::sqrt(3.0) * pi, kk[1], kk[2]);
    CHECK((coin(kk, spec).m - coin(shifted.reduced(), spec).m).norm() < 1e-12);
}

TEST_CASE("2D coin is 2 pi periodic per (k1,k2) axis") {
    const auto k = WaveVector::two(0.37, -1.91);
    const auto a0 = weyl_coin(k, {Model::Weyl2D}).m;
    const auto a1 = weyl_coin(WaveVector::two(k[0] + 2.0 * pi, k[1]), {Model::Weyl2D}).m;
    const auto a2 = weyl_coin(WaveVector::two(k[0], k[1] - 2.0 * pi), {Model::Weyl2D}).m;
    CHECK((a0 - a1).norm() < 1e-13);
    CHECK((a0 - a2).norm() < 1e-13);
}

TEST_CASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(weyl_coin(WaveVector::one(0.1), {Model::Weyl3D}), ConfigError);
    CHECK_THROWS_AS(dirac_coin(WaveVector::three(0.1, 0, 0), {Model::Dirac1D, 0.2}), ConfigError);
}
