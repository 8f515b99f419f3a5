#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "oracles.hpp"
#include "semistab/direct_sum.hpp"
#include "semistab/rng.hpp"

using namespace semistab;
using namespace semistab::directsum;

TEST_CASE("d_resolvent_norm reference points") {
    const auto peak = d_resolvent_norm(DirectSumOperator{32}, Complex{1.0, 16.0});
    CHECK(peak.norm >= 4.0 - 1e-9);
    CHECK(peak.attained.block_m == 16);
    CHECK(peak.certified);

    const auto line = d_resolvent_norm(DirectSumOperator{8}, Complex{1.0, 0.0});
    CHECK(line.norm <= 1.0 + 1e-9);
    CHECK(line.certified);

    const auto far = d_resolvent_norm(DirectSumOperator{4}, Complex{100.0, 0.0});
    CHECK(far.certified);
    CHECK(far.norm <= 1.0 / 95.0 + 1e-12);
    REQUIRE(far.tail_bound.has_value());
    CHECK(*far.tail_bound <= 1.0 / 95.0 + 1e-12);
    CHECK(far.norm ==
          doctest::Approx(oracles::dsum_brute_force(4, Complex{100.0, 0.0})).epsilon(1e-12));
}

TEST_CASE("d_resolvent_norm rejects spectrum points") {
    CHECK_THROWS_WITH_AS(d_resolvent_norm(DirectSumOperator{4}, Complex{4.0, 0.0}),
                         "lambda in sigma(D)", std::invalid_argument);
    CHECK_THROWS_AS(d_resolvent_norm(DirectSumOperator{4}, Complex{0.0, 2.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(d_resolvent_norm(DirectSumOperator{4}, Complex{1e-9, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("norm is non-decreasing in m_max") {
    Rng rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        const Complex lambda{rng.uniform(0.5, 2.5), rng.uniform(-10.0, 10.0)};
        double prev = 0.0;
        bool first = true;
        for (std::size_t m_max : {4, 8, 16}) {
            const auto rep = d_resolvent_norm(DirectSumOperator{m_max}, lambda);
            if (!first) CHECK(rep.norm >= prev - 1e-15);
            prev = rep.norm;
            first = false;
        }
    }
}

TEST_CASE("tail soundness: doubling m_max leaves certified norms fixed") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const Complex lambda{1.0, rng.uniform(-6.0, 6.0)};
        const auto a = d_resolvent_norm(DirectSumOperator{8}, lambda);
        const auto b = d_resolvent_norm(DirectSumOperator{16}, lambda);
        REQUIRE(a.certified);
        REQUIRE(b.certified);
        CHECK(std::abs(a.norm - b.norm) <= 1e-12 * std::max(1.0, a.norm));
    }
}

TEST_CASE("blowup_scan growth signature") {
    const ScanTable table = blowup_scan(DirectSumOperator{16});
    REQUIRE(table.rows.size() == 16);
    CHECK(blowup_growth_holds(table, 1e-9));
    CHECK(table.interpretation.find("Gearhart") != std::string::npos);

    // rows are on the line Re = 1, sorted by Im, each within its brute-force value
    double prev_im = 0.0;
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const auto& row = table.rows[k];
        CHECK(row.lambda.real() == 1.0);
        CHECK(row.lambda.imag() > prev_im);
        prev_im = row.lambda.imag();
        CHECK(row.status == CertStatus::certified);
        const double brute = oracles::dsum_brute_force(16, row.lambda);
        CHECK(row.norm <= brute + 1e-9);
        CHECK(row.norm >= brute - 1e-9);
    }

    CHECK_THROWS_AS(blowup_scan(DirectSumOperator{2}), std::invalid_argument);
}

TEST_CASE("spectrum enclosure scan") {
    const std::vector<Complex> grid = {Complex{2.0, 0.0}, Complex{0.0, 0.5}, Complex{0.0, 1.0},
                                       Complex{-1.0, 0.0}, Complex{3.0, 2.0}};
    const ScanTable table = spectrum_enclosure_report(DirectSumOperator{8}, grid);
    REQUIRE(table.rows.size() == 5);

    int skipped = 0, certified = 0;
    for (const auto& row : table.rows) {
        if (row.status == CertStatus::skipped) {
            ++skipped;
            // only the lattice point i falls inside the enclosure margin
            CHECK(row.lambda == Complex{0.0, 1.0});
        } else {
            CHECK(std::isfinite(row.norm));
            if (row.status == CertStatus::certified) ++certified;
            if (row.lambda == Complex{0.0, 0.5})
                CHECK(row.norm ==
                      doctest::Approx(oracles::dsum_brute_force(8, row.lambda)).epsilon(1e-12));
        }
    }
    CHECK(skipped == 1);
    CHECK(certified == 4);

    // rows sorted by Im
    for (std::size_t i = 1; i < table.rows.size(); ++i)
        CHECK(table.rows[i - 1].lambda.imag() <= table.rows[i].lambda.imag());
}

TEST_CASE("scan table serialization is stable") {
    const ScanTable table = blowup_scan(DirectSumOperator{4});
    const std::string csv1 = table.to_csv();
    const std::string csv2 = table.to_csv();
    CHECK(csv1 == csv2);
    CHECK(csv1.rfind("re,im,norm,attained_M,attained_n,certified\n", 0) == 0);

    const auto j = nlohmann::json::parse(table.to_json());
    CHECK(j.at("m_max") == 4);
    CHECK(j.at("rows").size() == 4);
    CHECK(j.at("rows")[0].contains("certified"));
    CHECK(j.contains("interpretation"));
}
