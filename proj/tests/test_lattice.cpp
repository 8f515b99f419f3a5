#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "semistab/lattice.hpp"
#include "semistab/rng.hpp"

using namespace semistab;
using namespace semistab::lattice;

TEST_CASE("pvector_norm") {
    const VectorFamily single({{Complex{3.0, 4.0}, Complex{0.0, -2.0}}}, 3.0);
    const auto pv = pvector_norm(single);
    CHECK(pv[0] == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(pv[1] == doctest::Approx(2.0).epsilon(1e-14));

    const VectorFamily pair({{Complex{1.0, 0.0}, Complex{0.0, 0.0}},
                             {Complex{0.0, 0.0}, Complex{1.0, 0.0}}},
                            2.0);
    const auto pv2 = pvector_norm(pair);
    CHECK(pv2[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pv2[1] == doctest::Approx(1.0).epsilon(1e-14));

    const VectorFamily ones({{Complex{1.0, 0.0}}, {Complex{1.0, 0.0}}}, 1.0);
    CHECK(pvector_norm(ones)[0] == doctest::Approx(2.0).epsilon(1e-15));

    CHECK_THROWS_AS(VectorFamily({{Complex{1.0, 0.0}}}, 0.5), std::invalid_argument);
}

TEST_CASE("krivine_margin reference values") {
    const VectorFamily fam({{Complex{1.0, 0.0}, Complex{0.0, 0.0}},
                            {Complex{0.0, 0.0}, Complex{1.0, 0.0}}},
                           2.0);
    const numlin::NonnegMatrix eye(2, {1.0, 0.0, 0.0, 1.0});
    CHECK(krivine_margin(eye, fam) == 0.0);

    const numlin::NonnegMatrix j2(2, {1.0, 1.0, 0.0, 1.0});
    // lhs components (sqrt(2), 1), rhs components (2, 1): tie at the second
    CHECK(krivine_margin(j2, fam) == 0.0);

    CHECK_THROWS_AS(krivine_margin(numlin::NonnegMatrix(3, std::vector<double>(9, 1.0)), fam),
                    std::invalid_argument);
}

TEST_CASE("single-vector margin reduces to the modulus inequality") {
    Rng rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 1 + rng.uniform_index(0, 5);
        std::vector<double> entries(d * d);
        for (auto& x : entries) x = rng.uniform01();
        CVector f(d);
        for (auto& x : f) x = rng.gaussian_complex();
        const double p = 1.0 + rng.uniform(0.0, 4.0);
        CHECK(krivine_margin(numlin::NonnegMatrix(d, entries), VectorFamily({f}, p)) >= -1e-12);
    }
}

TEST_CASE("krivine scale equivariance") {
    Rng rng(23);
    const std::size_t d = 4;
    std::vector<double> entries(d * d);
    for (auto& x : entries) x = rng.uniform01();
    std::vector<CVector> vecs(3, CVector(d));
    for (auto& v : vecs)
        for (auto& x : v) x = rng.gaussian_complex();
    const VectorFamily fam(vecs, 3.0);
    const double base = krivine_margin(numlin::NonnegMatrix(d, entries), fam);
    for (double c : {0.5, 3.7}) {
        std::vector<double> scaled = entries;
        for (auto& x : scaled) x *= c;
        const double got = krivine_margin(numlin::NonnegMatrix(d, scaled), fam);
        CHECK(got == doctest::Approx(c * base).epsilon(1e-12));
    }
}

TEST_CASE("krivine suite: 500 seeded trials, no violations") {
    const InequalityReport rep = krivine_suite(500, 7);
    CHECK(rep.trials == 500);
    CHECK(rep.worst_margin >= -1e-10);
    CHECK(rep.witness_json.empty());

    const auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j.at("trials") == 500);
    CHECK(j.at("seed") == 7);
    CHECK(!j.contains("witness"));
}

TEST_CASE("lub_dual_lower") {
    // k = 1 recovers the modulus componentwise
    const VectorFamily single({{Complex{3.0, 4.0}, Complex{0.0, 0.0}, Complex{-2.0, 0.0}}}, 2.5);
    const auto lb = lub_dual_lower(single, 1, 0);
    CHECK(lb[0] == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(lb[1] == 0.0);
    CHECK(lb[2] == doctest::Approx(2.0).epsilon(1e-12));

    // Hoelder equality case
    const VectorFamily pyth({{Complex{3.0, 0.0}, Complex{0.0, 0.0}},
                             {Complex{4.0, 0.0}, Complex{0.0, 0.0}}},
                            2.0);
    CHECK(lub_dual_lower(pyth, 1, 0)[0] == doctest::Approx(5.0).epsilon(1e-12));

    CHECK_THROWS_AS(lub_dual_lower(single, 0, 0), std::invalid_argument);
}

TEST_CASE("random dual samples never exceed the p-sum") {
    Rng rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 1 + rng.uniform_index(0, 4);
        const std::size_t k = 1 + rng.uniform_index(0, 4);
        const double ps[] = {1.0, 1.5, 2.0, 3.0, 10.0};
        const double p = ps[rng.uniform_index(0, 4)];
        std::vector<CVector> vecs(k, CVector(d));
        for (auto& v : vecs)
            for (auto& x : v) x = rng.gaussian_complex();
        const VectorFamily fam(vecs, p);
        const auto pv = pvector_norm(fam);
        const auto lb = lub_dual_lower(fam, 64, rng.next_u64());
        for (std::size_t j = 0; j < d; ++j) CHECK(lb[j] <= pv[j] + 1e-12);
    }
}

TEST_CASE("dual consistency at the optimal coefficients") {
    const auto rep = dual_consistency_suite(200, 7);
    CHECK(rep.worst_rel_gap <= 1e-10);
}

TEST_CASE("minkowski_margin reference values") {
    // constant grid: equality
    const std::vector<std::vector<double>> flat(3, std::vector<double>(5, 2.0));
    const std::vector<double> ws(3, 1.0 / 3.0), wt(5, 0.2);
    CHECK(std::abs(minkowski_margin(flat, 2.0, ws, wt)) <= 1e-14);

    // p = 1: Fubini, equality
    std::vector<std::vector<double>> g(4, std::vector<double>(4));
    Rng rng(31);
    for (auto& row : g)
        for (auto& x : row) x = rng.uniform01();
    const std::vector<double> w4(4, 0.25);
    CHECK(std::abs(minkowski_margin(g, 1.0, w4, w4)) <= 1e-14);

    // diagonal indicator, p = 2, uniform weights: strict inequality
    std::vector<std::vector<double>> ind(4, std::vector<double>(4, 0.0));
    for (int i = 0; i < 4; ++i) ind[i][i] = 1.0;
    const double lhs = 4.0 * 0.25 * std::sqrt(0.25);
    const double rhs = std::sqrt(4.0 * 0.25 * 0.25 * 0.25);
    const double margin = minkowski_margin(ind, 2.0, w4, w4);
    CHECK(margin == doctest::Approx(lhs - rhs).epsilon(1e-13));
    CHECK(margin > 0.0);

    std::vector<std::vector<double>> neg = flat;
    neg[1][2] = -0.25;
    CHECK_THROWS_WITH_AS(minkowski_margin(neg, 2.0, ws, wt), "negative entry",
                         std::invalid_argument);
    CHECK_THROWS_AS(minkowski_margin(flat, 0.9, ws, wt), std::invalid_argument);
}

TEST_CASE("minkowski suite: 200 seeded trials") {
    const InequalityReport rep = minkowski_suite(200, 7);
    CHECK(rep.worst_margin >= -1e-10);
    CHECK(rep.witness_json.empty());
}
