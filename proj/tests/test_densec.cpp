#include "doctest.h"
#include "liolab/densec.hpp"
#include "liolab/twolevel.hpp"
#include "test_support.hpp"

using namespace liolab;

TEST_CASE("kron: identity and single-entry examples") {
    CHECK(kron(CMatrix::identity(2), CMatrix::identity(2)) == CMatrix::identity(4));
    const CMatrix up{{0.0, 1.0}, {0.0, 0.0}};
    const CMatrix down{{0.0, 0.0}, {1.0, 0.0}};
    const CMatrix k = kron(up, down);
    CHECK(k.rows() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(k(i, j) == Complex((i == 1 && j == 2) ? 1.0 : 0.0));
}

TEST_CASE("kron: block structure and rectangular shapes") {
    const CMatrix a = testing::random_matrix(2, 3);
    const CMatrix b = testing::random_matrix(4, 2);
    const CMatrix k = kron(a, b);
    REQUIRE(k.rows() == 8);
    REQUIRE(k.cols() == 6);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t p = 0; p < 4; ++p)
                for (std::size_t q = 0; q < 2; ++q) CHECK(k(i * 4 + p, j * 2 + q) == a(i, j) * b(p, q));
}

TEST_CASE("kron: mixed-product identity on random inputs") {
    for (int trial = 0; trial < 50; ++trial) {
        const CMatrix a = testing::random_matrix(3, 3), c = testing::random_matrix(3, 3);
        const CMatrix b = testing::random_matrix(2, 2), d = testing::random_matrix(2, 2);
        const CMatrix lhs = testing::naive_mul(kron(a, b), kron(c, d));
        const CMatrix rhs = kron(testing::naive_mul(a, c), testing::naive_mul(b, d));
        CHECK(distance(lhs, rhs) <= 1e-12 * (1.0 + frobenius_norm(rhs)));
    }
}

TEST_CASE("eig: diagonal and Jordan examples") {
    const CVector diag{1.0, Complex(0, 2)};
    const auto r = eig(CMatrix::diagonal(diag));
    REQUIRE(r.values.size() == 2);
    CHECK(testing::multiset_distance(r.values, diag) < 1e-14);

    const CMatrix jordan{{0.0, 1.0}, {0.0, 0.0}};
    const auto j = eig(jordan);
    CHECK(std::abs(j.values[0]) < 1e-14);
    CHECK(std::abs(j.values[1]) < 1e-14);
    for (const auto& v : j.right_vectors) {
        CHECK(std::abs(std::abs(v[0]) - 1.0) < 1e-12);
        CHECK(std::abs(v[1]) < 1e-12);
    }
    CHECK(rank_at(jordan, 0.0) == 1);
}

TEST_CASE("eig: two-level superoperator at (1,1,2,1)") {
    const auto l = twolevel::liouvillian({1.0, 1.0, 2.0, 1.0});
    const auto r = eig(l.matrix);
    const double re = std::sqrt(63.0) / 4.0;  // 1.98431...
    const CVector expected{0.0, Complex(0, -0.5), Complex(re, -0.75), Complex(-re, -0.75)};
    CHECK(testing::multiset_distance(r.values, expected) < 1e-12);
    CHECK(r.residual_bound < 1e-13);
}

TEST_CASE("eig: residual, unit norm and trace identity on random matrices") {
    for (std::size_t n = 1; n <= 16; ++n) {
        const CMatrix m = testing::random_matrix(n, n, 2.0);
        const auto r = eig(m);
        REQUIRE(r.values.size() == n);
        REQUIRE(r.right_vectors.size() == n);
        const double fn = frobenius_norm(m);
        Complex sum{};
        for (std::size_t k = 0; k < n; ++k) {
            sum += r.values[k];
            const auto& v = r.right_vectors[k];
            CHECK(std::abs(testing::vnorm(v) - 1.0) < 1e-12);
            CVector mv = testing::naive_apply(m, v);
            for (std::size_t i = 0; i < n; ++i) mv[i] -= r.values[k] * v[i];
            CHECK(testing::vnorm(mv) <= 1e-10 * fn);
        }
        CHECK(std::abs(sum - trace(m)) <= 1e-10 * fn);
        CHECK(r.residual_bound <= 1e-10);
    }
}

TEST_CASE("eig: values are sorted and vectors phase-normalized") {
    const auto r = eig(testing::random_matrix(6, 6));
    for (std::size_t k = 1; k < r.values.size(); ++k) {
        const auto a = r.values[k - 1], b = r.values[k];
        CHECK((a.real() < b.real() || (a.real() == b.real() && a.imag() <= b.imag())));
    }
    for (const auto& v : r.right_vectors) {
        const double big = testing::max_abs(v);
        bool found = false;
        for (auto z : v)
            if (std::abs(z) >= big * (1 - 1e-8) && std::abs(z.imag()) < 1e-14 && z.real() > 0) found = true;
        CHECK(found);
    }
}

TEST_CASE("eig: errors") {
    CHECK_THROWS_AS(eig(CMatrix(2, 3)), DimensionError);
    CMatrix bad = CMatrix::identity(2);
    bad(1, 0) = Complex(INFINITY, 0);
    CHECK_THROWS_AS(eig(bad), std::invalid_argument);
    CHECK(eig(CMatrix::zeros(3, 3)).residual_bound == 0.0);
}

TEST_CASE("propagate: trivial generators") {
    const CVector v = testing::random_vector(5);
    CHECK(testing::vdist(propagate(CMatrix::zeros(5, 5), v, 3.7), v) == 0.0);
    const CVector lam{Complex(1, -0.5), Complex(-2, 0), Complex(0, -1), Complex(0.3, 0.2)};
    const CVector x = testing::random_vector(4);
    const double t = 2.5;
    const CVector y = propagate(CMatrix::diagonal(lam), x, t);
    for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(y[j] - std::exp(-kI * lam[j] * t) * x[j]) < 1e-9 * std::abs(x[j]) + 1e-14);
}

TEST_CASE("propagate: agrees with RK4 oracle at step 1e-4") {
    for (int trial = 0; trial < 3; ++trial) {
        const CMatrix m = testing::random_matrix(4, 4);
        const CVector v = testing::random_vector(4);
        const CVector exact = testing::rk4(m, v, 1.0, 1e-4);
        const CVector got = propagate(m, v, 1.0);
        CHECK(testing::vdist(got, exact) <= 1e-8 * testing::vnorm(exact));
    }
}

TEST_CASE("propagate: semigroup property and negative time") {
    for (int trial = 0; trial < 10; ++trial) {
        const CMatrix m = testing::random_matrix(4, 4, 1.5);
        const CVector v = testing::random_vector(4);
        const double t1 = testing::uniform(0.0, 2.0), t2 = testing::uniform(0.0, 2.0);
        const CVector a = propagate(m, propagate(m, v, t1), t2);
        const CVector b = propagate(m, v, t1 + t2);
        CHECK(testing::vdist(a, b) <= 3e-9 * testing::vnorm(b));
        const CVector back = propagate(m, propagate(m, v, t1), -t1);
        CHECK(testing::vdist(back, v) <= 3e-9 * testing::vnorm(v) * std::exp(frobenius_norm(m) * t1));
    }
    CHECK_THROWS_AS(propagate(CMatrix::identity(3), CVector(2), 1.0), DimensionError);
}

TEST_CASE("expm: matches propagate columns and commuting identity") {
    const CMatrix m = testing::random_matrix(5, 5);
    CMatrix a = m;
    a *= -kI * 0.7;
    const CMatrix e = expm(a);
    for (std::size_t j = 0; j < 5; ++j) {
        CVector ej(5);
        ej[j] = 1.0;
        const CVector col = propagate(m, ej, 0.7);
        for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(e(i, j) - col[i]) < 1e-9);
    }
    CMatrix neg = a;
    neg *= -1.0;
    CHECK(distance(testing::naive_mul(e, expm(neg)), CMatrix::identity(5)) < 1e-9);
    CHECK(expm(CMatrix::zeros(3, 3)) == CMatrix::identity(3));
}

TEST_CASE("rank_at examples") {
    CHECK(rank_at(CMatrix::identity(2), 1.0) == 0);
    CHECK(rank_at(CMatrix{{0.0, 1.0}, {0.0, 0.0}}, 0.0) == 1);
    const auto l = twolevel::liouvillian({1.0, 1.0, 0.0, 2.0});
    CHECK(4 - rank_at(l.matrix, Complex(0, -1)) == 3);
    CHECK(rank_at(CMatrix::identity(3), 2.0) == 3);
}

TEST_CASE("null_space spans the kernel") {
    const auto l = twolevel::liouvillian({1.0, 1.0, 0.0, 2.0});
    const auto basis = null_space(l.matrix, Complex(0, -1));
    CHECK(basis.size() == 3);
    for (const auto& v : basis) {
        CVector r = testing::naive_apply(l.matrix, v);
        for (std::size_t i = 0; i < 4; ++i) r[i] -= Complex(0, -1) * v[i];
        CHECK(testing::vnorm(r) < 1e-12);
        CHECK(std::abs(testing::vnorm(v) - 1.0) < 1e-12);
    }
    const auto singular = shifted_singular_values(CMatrix::diagonal(CVector{3.0, 1.0, 2.0}), 0.0);
    CHECK(singular == std::vector<double>{3.0, 2.0, 1.0});
}

TEST_CASE("normalize_phase") {
    CVector v{Complex(0, 3), Complex(0, 4)};
    normalize_phase(v);
    CHECK(std::abs(testing::vnorm(v) - 1.0) < 1e-15);
    CHECK(std::abs(v[1] - Complex(0.8, 0)) < 1e-15);
    CHECK(std::abs(v[0] - Complex(0.6, 0)) < 1e-15);
}
