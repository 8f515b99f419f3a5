#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "semistab/numlin.hpp"
#include "semistab/rng.hpp"
#include "semistab/shift_block.hpp"

using namespace semistab;
using namespace semistab::shiftblock;

TEST_CASE("make_shift") {
    const CMatrix c1 = make_shift(1);
    CHECK(c1.rows() == 1);
    CHECK(c1(0, 0) == Complex{0.0, 0.0});

    const CMatrix c3 = make_shift(3);
    const CMatrix want =
        CMatrix::from_rows({{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(c3(i, j) == want(i, j));

    for (std::size_t m : {2, 5, 17})
        CHECK(numlin::op_norm2(make_shift(m)) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(make_shift(0), std::invalid_argument);
}

TEST_CASE("shift_resolvent closed form") {
    const CMatrix r = shift_resolvent(2, Complex{1.0, 0.0});
    CHECK(r(0, 0) == Complex{1.0, 0.0});
    CHECK(r(0, 1) == Complex{1.0, 0.0});
    CHECK(r(1, 0) == Complex{0.0, 0.0});
    CHECK(r(1, 1) == Complex{1.0, 0.0});

    const CMatrix r3 = shift_resolvent(3, Complex{2.0, 0.0});
    CHECK(r3(0, 0) == Complex{0.5, 0.0});
    CHECK(r3(1, 2) == Complex{0.25, 0.0});
    CHECK(r3(0, 2) == Complex{0.125, 0.0});

    const CMatrix r1 = shift_resolvent(1, Complex{0.0, 1.0});
    CHECK(std::abs(r1(0, 0) - Complex{0.0, -1.0}) <= 1e-16);

    CHECK_THROWS_WITH_AS(shift_resolvent(3, Complex{0.0, 0.0}), "0 is the spectrum of C_M",
                         std::invalid_argument);
}

TEST_CASE("shift_resolvent solves the resolvent equation") {
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = 1 + rng.uniform_index(0, 39);
        const Complex lambda = std::polar(rng.uniform(0.5, 3.0), rng.uniform(0.0, 6.28));
        const CMatrix r = shift_resolvent(m, lambda);
        CMatrix lhs = CMatrix::identity(m);
        lhs *= lambda;
        lhs -= make_shift(m);
        const CMatrix prod = lhs * r;
        const CMatrix id = CMatrix::identity(m);
        if (std::abs(lambda) >= 0.5) {
            double worst = 0.0;
            for (std::size_t k = 0; k < prod.entries().size(); ++k)
                worst = std::max(worst, std::abs(prod.entries()[k] - id.entries()[k]));
            CHECK(worst <= 1e-12 * r.max_abs());
        }
    }
}

TEST_CASE("shift_resolvent agrees with the generic solver") {
    Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t m = 1 + rng.uniform_index(0, 23);
        const Complex lambda = std::polar(rng.uniform(0.8, 4.0), rng.uniform(0.0, 6.28));
        CVector g(m);
        for (auto& x : g) x = rng.gaussian_complex();
        const CVector via_formula = shift_resolvent(m, lambda).apply(g);
        const CVector via_solver = numlin::resolvent_apply(make_shift(m), lambda, g);
        CVector diff(m);
        for (std::size_t i = 0; i < m; ++i) diff[i] = via_formula[i] - via_solver[i];
        CHECK(norm2(diff) <= 1e-10 * norm2(via_formula));
    }
}

TEST_CASE("shift_exp closed form") {
    const CMatrix e0 = shift_exp(3, 0.0);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(e0(i, j) == Complex{i == j ? 1.0 : 0.0, 0.0});

    const CMatrix e1 = shift_exp(3, 1.0);
    CHECK(e1(0, 0) == Complex{1.0, 0.0});
    CHECK(e1(0, 1) == Complex{1.0, 0.0});
    CHECK(e1(0, 2) == Complex{0.5, 0.0});
    CHECK(e1(1, 2) == Complex{1.0, 0.0});

    CHECK(shift_exp(4, 2.0)(0, 3).real() == doctest::Approx(4.0 / 3.0).epsilon(1e-15));

    // nonnegative for t >= 0
    for (const auto& v : shift_exp(6, 2.5).entries()) CHECK(v.real() >= 0.0);
}

TEST_CASE("shift_exp semigroup law and envelope") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 1 + rng.uniform_index(0, 31);
        const double s = rng.uniform(0.0, 4.0);
        const double t = rng.uniform(0.0, 4.0);
        const CMatrix prod = shift_exp(m, s) * shift_exp(m, t);
        const CMatrix direct = shift_exp(m, s + t);
        double worst = 0.0;
        for (std::size_t k = 0; k < prod.entries().size(); ++k)
            worst = std::max(worst, std::abs(prod.entries()[k] - direct.entries()[k]));
        CHECK(worst <= 1e-12 * direct.max_abs());
        CHECK(numlin::op_norm2(direct) <= std::exp(s + t) + 1e-9);
    }
}

TEST_CASE("shift_exp agrees with expm") {
    for (std::size_t m : {1, 4, 13}) {
        for (double t : {0.3, 1.0, 3.7}) {
            const CMatrix a = shift_exp(m, t);
            const CMatrix b = numlin::expm(make_shift(m), t);
            for (std::size_t k = 0; k < a.entries().size(); ++k)
                CHECK(std::abs(a.entries()[k] - b.entries()[k]) <= 1e-14 * a.max_abs());
        }
    }
}

TEST_CASE("shift_bounds_report") {
    const auto on_circle = shift_bounds_report(16, std::polar(1.0, 3.14159 / 3.0));
    REQUIRE(on_circle.lower.has_value());
    CHECK(*on_circle.lower == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(on_circle.norm >= 4.0 - 1e-9);
    CHECK(!on_circle.violated);

    const auto outside = shift_bounds_report(10, Complex{3.0, 0.0});
    REQUIRE(outside.upper.has_value());
    CHECK(*outside.upper == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(outside.norm <= 0.5 + 1e-9);
    CHECK(!outside.violated);

    const auto unit = shift_bounds_report(2, Complex{1.0, 0.0});
    CHECK(unit.norm == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-10));

    CHECK_THROWS_AS(shift_bounds_report(4, Complex{0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("cached resolvent norm agrees with the power-iteration route") {
    for (std::size_t m : {2, 7, 31, 64}) {
        for (double mod : {1.0, 1.3, 2.7}) {
            for (double angle : {0.0, 1.1, 3.9}) {
                const Complex lambda = std::polar(mod, angle);
                const double fast = resolvent_norm(m, lambda);
                const double power = numlin::op_norm2(shift_resolvent(m, lambda));
                CHECK(std::abs(fast - power) <= 1e-8 * std::max(1.0, power));
            }
        }
    }
}

TEST_CASE("resolvent norm bounds on a reduced grid") {
    // acceptance covers M up to 128 with 32 angles; keep the unit version small
    for (std::size_t m : {2, 4, 16, 64}) {
        for (int k = 0; k < 8; ++k) {
            const Complex lambda = std::polar(1.0, 6.283185307179586 * k / 8.0);
            CHECK(resolvent_norm(m, lambda) >= std::sqrt(static_cast<double>(m)) - 1e-9);
        }
        for (double mod : {1.5, 2.0, 3.0}) {
            const Complex lambda = std::polar(mod, 0.7);
            CHECK(resolvent_norm(m, lambda) <= 1.0 / (mod - 1.0) + 1e-9);
        }
    }
}
