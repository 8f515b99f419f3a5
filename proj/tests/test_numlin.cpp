#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "semistab/numlin.hpp"
#include "semistab/rng.hpp"

using namespace semistab;
using numlin::op_norm2;

namespace {

CMatrix random_matrix(Rng& rng, std::size_t n, double scale = 1.0) {
    CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = scale * rng.gaussian_complex();
    return a;
}

CMatrix shift(std::size_t m) { return shiftblock::make_shift(m); }

}  // namespace

TEST_CASE("op_norm2 reference values") {
    CHECK(op_norm2(CMatrix::identity(5)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(op_norm2(CMatrix(3, 3)) == 0.0);

    const CMatrix a = CMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}});
    const double oracle = oracles::sv_max_2x2(1.0, 1.0, 0.0, 1.0);
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(oracle == doctest::Approx(golden).epsilon(1e-15));
    CHECK(op_norm2(a) == doctest::Approx(golden).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(op_norm2(CMatrix()), "empty matrix", std::invalid_argument);
}

TEST_CASE("op_norm2 survives a start vector in the null space") {
    // all-ones is annihilated by this matrix; the fallback start must recover
    const CMatrix a = CMatrix::from_rows({{1.0, -1.0}, {1.0, -1.0}});
    CHECK(op_norm2(a) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("expm reference values") {
    const CMatrix e0 = numlin::expm(CMatrix(4, 4), 7.0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(e0(i, j) == Complex{i == j ? 1.0 : 0.0, 0.0});

    const CMatrix e1 = numlin::expm(shift(3), 1.0);
    const CMatrix want = CMatrix::from_rows({{1.0, 1.0, 0.5}, {0.0, 1.0, 1.0}, {0.0, 0.0, 1.0}});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(std::abs(e1(i, j) - want(i, j)) <= 1e-15);

    const CMatrix e2 = numlin::expm(CMatrix::diagonal({Complex{-1.0, 0.0}}), std::log(2.0));
    CHECK(e2(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));

    CHECK_THROWS_AS(numlin::expm(CMatrix(2, 3), 1.0), std::invalid_argument);
}

TEST_CASE("expm matches a similarity-transformed generic path") {
    // exp of a triangular matrix takes the exact finite-Taylor branch; the
    // unitarily conjugated copy is dense and exercises scaling-and-squaring.
    Rng rng(11);
    for (std::size_t m : {3, 6}) {
        const CMatrix c = shift(m);
        // unitary from the QR-like normalization of a random matrix: use
        // Householder of a random vector for simplicity.
        CVector v(m);
        for (auto& x : v) x = rng.gaussian_complex();
        double vn = norm2(v);
        for (auto& x : v) x /= vn;
        CMatrix u = CMatrix::identity(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) u(i, j) -= 2.0 * v[i] * std::conj(v[j]);
        const CMatrix dense = u * c * u.adjoint();
        const CMatrix lhs = u * numlin::expm(c, 1.5) * u.adjoint();
        const CMatrix rhs = numlin::expm(dense, 1.5);
        CHECK(op_norm2(lhs - rhs) <= 1e-12 * op_norm2(lhs));
    }
}

TEST_CASE("resolvent_apply reference values") {
    const CVector x1 = numlin::resolvent_apply(CMatrix::diagonal({Complex{-2.0, 0.0}}),
                                               Complex{0.0, 0.0}, {Complex{1.0, 0.0}});
    CHECK(std::abs(x1[0] - Complex{0.5, 0.0}) <= 1e-14);

    const CVector x2 = numlin::resolvent_apply(shift(2), Complex{1.0, 0.0},
                                               {Complex{0.0, 0.0}, Complex{1.0, 0.0}});
    CHECK(std::abs(x2[0] - Complex{1.0, 0.0}) <= 1e-12);
    CHECK(std::abs(x2[1] - Complex{1.0, 0.0}) <= 1e-12);

    CHECK_THROWS_WITH_AS(
        numlin::resolvent_apply(shift(2), Complex{0.0, 0.0}, {Complex{1.0, 0.0}, Complex{0.0, 0.0}}),
        "lambda in or near spectrum", std::runtime_error);
}

TEST_CASE("resolvent_apply residual bound") {
    Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + rng.uniform_index(0, 6);
        const CMatrix a = random_matrix(rng, n);
        const Complex lambda{rng.uniform(2.0, 6.0) * (1.0 + op_norm2(a)), rng.uniform(-1.0, 1.0)};
        CVector g(n);
        for (auto& x : g) x = rng.gaussian_complex();
        const CVector x = numlin::resolvent_apply(a, lambda, g);
        CVector lhs(n);
        const CVector ax = a.apply(x);
        for (std::size_t i = 0; i < n; ++i) lhs[i] = lambda * x[i] - ax[i] - g[i];
        CHECK(norm2(lhs) <= 1e-10 * (std::abs(lambda) + op_norm2(a)) * norm2(x));
    }
}

TEST_CASE("spectral_bound reference values") {
    CHECK(std::abs(numlin::spectral_bound(shift(4))) <= 1e-9);
    CHECK(numlin::spectral_bound(CMatrix::diagonal({Complex{-1.0, 0.0}, Complex{-3.0, 0.0}})) ==
          doctest::Approx(-1.0).epsilon(1e-12));

    CMatrix a = shift(2);
    a += 4.0 * CMatrix::identity(2);
    CHECK(numlin::spectral_bound(a) ==
          doctest::Approx(oracles::triangular_spectral_bound(a)).epsilon(1e-12));

    CHECK_THROWS_AS(numlin::spectral_bound(CMatrix(65, 65)), std::invalid_argument);
}

TEST_CASE("eigenvalues reproduce the trace on random matrices") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng.uniform_index(0, 6);
        const CMatrix a = random_matrix(rng, n);
        const auto eig = numlin::eigenvalues(a);
        Complex sum{0.0, 0.0};
        for (const auto& z : eig) sum += z;
        Complex tr{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) tr += a(i, i);
        CHECK(std::abs(sum - tr) <= 1e-10 * (1.0 + std::abs(tr)));
    }
}

TEST_CASE("pnorm_nonneg reference values") {
    const numlin::NonnegMatrix eye(2, {1.0, 0.0, 0.0, 1.0});
    for (double p : {1.0, 1.7, 2.0, 3.0, 10.0})
        CHECK(numlin::pnorm_nonneg(eye, p) == doctest::Approx(1.0).epsilon(1e-12));

    const numlin::NonnegMatrix j2(2, {1.0, 1.0, 0.0, 1.0});
    CHECK(numlin::pnorm_nonneg(j2, 1.0) ==
          doctest::Approx(oracles::max_col_sum(j2.as_cmatrix())).epsilon(1e-15));
    CHECK(numlin::pnorm_nonneg(j2, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(numlin::pnorm_nonneg(j2, 2.0) ==
          doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-8));

    CHECK_THROWS_AS(numlin::pnorm_nonneg(j2, 0.5), std::invalid_argument);
    CHECK_THROWS_WITH_AS(numlin::NonnegMatrix(2, {1.0, -0.5, 0.0, 1.0}), "negative entry",
                         std::invalid_argument);
}

TEST_CASE("pnorm_nonneg agrees with op_norm2 at p = 2") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng.uniform_index(0, 7);
        std::vector<double> entries(n * n);
        for (auto& x : entries) x = rng.uniform01();
        const numlin::NonnegMatrix p(n, entries);
        const double boyd = numlin::pnorm_nonneg(p, 2.0);
        const double power = op_norm2(p.as_cmatrix());
        CHECK(std::abs(boyd - power) <= 1e-8 * power);
    }
}

TEST_CASE("pnorm_nonneg is monotone in the entries") {
    Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 1 + rng.uniform_index(0, 5);
        std::vector<double> pe(n * n), qe(n * n);
        for (std::size_t k = 0; k < n * n; ++k) {
            pe[k] = rng.uniform01();
            qe[k] = pe[k] + rng.uniform01();
        }
        const numlin::NonnegMatrix p(n, pe), q(n, qe);
        for (double pp : {1.0, 1.5, 2.0, 3.0})
            CHECK(numlin::pnorm_nonneg(p, pp) <= numlin::pnorm_nonneg(q, pp) + 1e-8);
    }
}

TEST_CASE("semigroup law") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng.uniform_index(0, 7);
        const CMatrix a = random_matrix(rng, n, 0.7);
        const double s = rng.uniform(0.0, 4.0);
        const double t = rng.uniform(0.0, 4.0);
        const CMatrix lhs = numlin::expm(a, s) * numlin::expm(a, t);
        const CMatrix rhs = numlin::expm(a, s + t);
        const double bound = 1e-9 * std::exp((s + t) * op_norm2(a));
        CHECK(op_norm2(lhs - rhs) <= bound);
    }
}

TEST_CASE("resolvent identity") {
    Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng.uniform_index(0, 4);
        const CMatrix a = random_matrix(rng, n);
        const double r = 1.5 + op_norm2(a);
        const Complex lambda = std::polar(r * rng.uniform(1.0, 2.0), rng.uniform(0.0, 6.28));
        const Complex mu = std::polar(r * rng.uniform(1.0, 2.0), rng.uniform(0.0, 6.28));
        auto res = [&](Complex z) {
            CMatrix m = CMatrix::identity(n);
            m *= z;
            m -= a;
            return numlin::inverse(m);
        };
        const CMatrix rl = res(lambda);
        const CMatrix rm = res(mu);
        CMatrix gap = rl - rm;
        gap -= (mu - lambda) * (rl * rm);
        CHECK(op_norm2(gap) <= 1e-8 * op_norm2(rl) * op_norm2(rm));
    }
}

TEST_CASE("norm sandwich") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng.uniform_index(0, 7);
        const std::size_t cols = 1 + rng.uniform_index(0, 7);
        CMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.gaussian_complex();
        const double nrm = op_norm2(a);
        const double fro = a.frobenius_norm();
        CHECK(oracles::max_col_norm2(a) <= nrm + 1e-12 * (1.0 + fro));
        CHECK(nrm <= fro + 1e-12 * (1.0 + fro));
    }
}

TEST_CASE("metzler exponentials stay nonnegative") {
    Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng.uniform_index(0, 5);
        CMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = (i == j) ? Complex{rng.uniform(-3.0, 1.0), 0.0}
                                   : Complex{rng.uniform01(), 0.0};
        for (double t : {0.5, 1.0, 3.0}) {
            const CMatrix e = numlin::expm(a, t);
            for (const auto& v : e.entries()) {
                CHECK(v.imag() == 0.0);
                CHECK(v.real() >= -1e-12);
            }
        }
    }
}

TEST_CASE("LU adjoint solve") {
    Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + rng.uniform_index(0, 5);
        const CMatrix m = random_matrix(rng, n);
        numlin::LuFactor lu(m);
        REQUIRE(!lu.singular());
        CVector b(n);
        for (auto& x : b) x = rng.gaussian_complex();
        const CVector x = lu.solve_adjoint(b);
        const CVector back = m.adjoint().apply(x);
        CVector diff(n);
        for (std::size_t i = 0; i < n; ++i) diff[i] = back[i] - b[i];
        CHECK(norm2(diff) <= 1e-10 * norm2(b) * (1.0 + m.frobenius_norm()));
    }
}
