#include "doctest.h"
#include "liolab/densec.hpp"
#include "liolab/twolevel.hpp"
#include "liolab/vectorize.hpp"
#include "test_support.hpp"

using namespace liolab;

namespace {

// Literal transcription of the published two-level superoperator.
CMatrix published_matrix(double g1, double g2, double w, double gd) {
    const Complex a = kI * w / 2.0;
    const double d = (g2 - g1 - gd) / 2.0;
    CMatrix m{{-g1, a, -a, gd}, {a, d, 0.0, -a}, {-a, 0.0, d, a}, {0.0, -a, a, g2 - gd}};
    m *= kI;
    return m;
}

OpenSystem random_system(std::size_t n, std::size_t channels) {
    OpenSystem sys;
    sys.hamiltonian = testing::random_matrix(n, n);
    for (std::size_t c = 0; c < channels; ++c) sys.channels.push_back({testing::uniform(0.0, 2.0), testing::random_matrix(n, n)});
    return sys;
}

}  // namespace

TEST_CASE("vec_row / unvec_row examples") {
    CHECK(vec_row(CMatrix::identity(2)) == CVector{1.0, 0.0, 0.0, 1.0});
    const CMatrix m{{1.0, 2.0}, {3.0, 4.0}};
    CHECK(vec_row(m) == CVector{1.0, 2.0, 3.0, 4.0});
    CHECK(unvec_row(CVector{1.0, 0.0, 0.0, 1.0}) == CMatrix::identity(2));
    CHECK(unvec_row(CVector{1.0, 2.0, 3.0, 4.0}) == m);
    CHECK_THROWS_AS(vec_row(CMatrix(2, 3)), DimensionError);
    CHECK_THROWS_AS(unvec_row(CVector(5)), DimensionError);
}

TEST_CASE("vec/unvec round trip") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const CMatrix x = testing::random_matrix(n, n);
        CHECK(unvec_row(vec_row(x)) == x);
    }
}

TEST_CASE("vec identity: vec(A X B) = (A kron B^T) vec(X)") {
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix a = testing::random_matrix(3, 3), x = testing::random_matrix(3, 3), b = testing::random_matrix(3, 3);
        const CVector lhs = vec_row(testing::naive_mul(testing::naive_mul(a, x), b));
        const CVector rhs = testing::naive_apply(kron(a, b.transpose()), vec_row(x));
        CHECK(testing::vdist(lhs, rhs) <= 1e-12 * (1.0 + testing::vnorm(rhs)));
    }
}

TEST_CASE("superoperator reproduces the published two-level matrix") {
    const auto l = build_liouvillian(twolevel::open_system({1.0, 1.0, 2.0, 1.0}));
    CHECK(l.dim == 2);
    CHECK(l.convention == kLiouvillianConvention);
    const CMatrix expected{{-1.0, kI, -kI, 1.0}, {kI, -0.5, 0.0, -kI}, {-kI, 0.0, -0.5, kI}, {0.0, -kI, kI, 0.0}};
    CHECK(testing::max_abs_diff(l.matrix, kI * expected) <= 1e-14);
    for (int trial = 0; trial < 200; ++trial) {
        const double g1 = testing::uniform(0, 5), g2 = testing::uniform(0, 5), w = testing::uniform(-5, 5),
                     gd = testing::uniform(0, 5);
        const auto lt = twolevel::liouvillian({g1, g2, w, gd});
        CHECK(testing::max_abs_diff(lt.matrix, published_matrix(g1, g2, w, gd)) <= 1e-14);
    }
}

TEST_CASE("literal dagger form coincides with the conjugate form on the two-level model") {
    // H is complex-symmetric and sigma_- is real, so H^dag = conj(H) and C^dag = conj(C)^T.
    for (int trial = 0; trial < 20; ++trial) {
        const twolevel::TwoLevelParams p{testing::uniform(0, 3), testing::uniform(0, 3), testing::uniform(-3, 3),
                                         testing::uniform(0, 3)};
        const CMatrix h = twolevel::hamiltonian(p);
        const CMatrix c = twolevel::sigma_minus();
        const CMatrix i2 = CMatrix::identity(2);
        const CMatrix cdc = testing::naive_mul(c.adjoint(), c);
        CMatrix dissip = kron(c, c) - Complex(0.5) * kron(cdc, i2) - Complex(0.5) * kron(i2, cdc);
        dissip *= kI * p.dissipation;
        const CMatrix literal = kron(h, i2) - kron(i2, h.adjoint()) + dissip;
        CHECK(testing::max_abs_diff(literal, twolevel::liouvillian(p).matrix) <= 1e-15);
    }
}

TEST_CASE("empty system gives the zero superoperator") {
    OpenSystem sys{CMatrix::zeros(3, 3), {}};
    CHECK(build_liouvillian(sys).matrix == CMatrix::zeros(9, 9));
}

TEST_CASE("-i L vec(rho) equals the direct right-hand side") {
    for (std::size_t n : {2u, 3u, 4u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const OpenSystem sys = random_system(n, 2);
            const CMatrix rho = testing::random_matrix(n, n);
            const auto l = build_liouvillian(sys);
            CVector lhs = testing::naive_apply(l.matrix, vec_row(rho));
            for (auto& z : lhs) z *= -kI;
            const CVector rhs = vec_row(rhs_direct(sys, rho));
            CHECK(testing::vdist(lhs, rhs) <= 1e-12 * (1.0 + testing::vnorm(rhs)));
        }
    }
}

TEST_CASE("rhs_direct examples") {
    OpenSystem herm{testing::random_hermitian(3), {}};
    CMatrix mixed = CMatrix::identity(3);
    mixed *= 1.0 / 3.0;
    CHECK(frobenius_norm(rhs_direct(herm, mixed)) < 1e-15);

    const auto sys = twolevel::open_system({1.0, 1.0, 2.0, 1.0});
    const CMatrix ground{{1.0, 0.0}, {0.0, 0.0}};
    CHECK(std::abs(rhs_direct(sys, ground)(0, 0) - Complex(-1.0)) < 1e-15);
    CHECK_THROWS_AS(rhs_direct(sys, CMatrix::identity(3)), DimensionError);
}

TEST_CASE("Hermiticity preservation and trace-rate identity") {
    for (std::size_t n : {2u, 3u, 4u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const OpenSystem sys = random_system(n, 2);
            const CMatrix rho = testing::random_density(n);
            const CMatrix d = rhs_direct(sys, rho);
            CHECK(distance(d, d.adjoint()) <= 1e-13 * (1.0 + frobenius_norm(d)));
            const CMatrix skew = sys.hamiltonian - sys.hamiltonian.adjoint();
            const Complex expected = -kI * trace(testing::naive_mul(skew, rho));
            CHECK(std::abs(trace(d) - expected) <= 1e-12 * (1.0 + std::abs(expected)));
        }
    }
}

TEST_CASE("Hermitian H: vec(I) is a left null vector of -iL") {
    for (std::size_t n : {2u, 3u, 4u}) {
        OpenSystem sys = random_system(n, 2);
        sys.hamiltonian = testing::random_hermitian(n);
        const auto l = build_liouvillian(sys);
        const CVector probe = vec_row(CMatrix::identity(n));
        for (std::size_t j = 0; j < n * n; ++j) {
            Complex s{};
            for (std::size_t i = 0; i < n * n; ++i) s += probe[i] * l.matrix(i, j);
            CHECK(std::abs(s) <= 1e-12);
        }
    }
}

TEST_CASE("stationary eigenvector keeps constant norm under propagation") {
    const auto l = twolevel::liouvillian({1.0, 1.0, 2.0, 1.0});
    const CVector steady{0.5, 0.0, 0.0, 0.5};
    for (double t = 0.0; t <= 10.0; t += 2.5) {
        const CVector v = propagate(l.matrix, steady, t);
        CHECK(testing::vdist(v, steady) < 1e-9);
    }
}

TEST_CASE("system validation") {
    OpenSystem sys{CMatrix::identity(2), {{1.0, CMatrix::identity(3)}}};
    CHECK_THROWS_AS(build_liouvillian(sys), DimensionError);
    sys.channels = {{-1.0, CMatrix::identity(2)}};
    CHECK_THROWS_AS(build_liouvillian(sys), std::invalid_argument);
    OpenSystem rect{CMatrix(2, 3), {}};
    CHECK_THROWS_AS(build_liouvillian(rect), DimensionError);
}
