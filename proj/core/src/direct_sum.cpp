#include "semistab/direct_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace semistab::directsum {

namespace {

void check_excluded(Complex lambda) {
    if (std::abs(lambda - Complex{4.0, 0.0}) <= 1e-8)
        throw std::invalid_argument("lambda in sigma(D)");
    // block 1 already contributes every i*k, k != 0
    const long k = std::lround(lambda.imag());
    if (k != 0 && std::abs(lambda - Complex{0.0, static_cast<double>(k)}) <= 1e-8)
        throw std::invalid_argument("lambda in sigma(D)");
}

// Upper bound on ||(lambda - B_M)^{-1}|| uniform over all blocks M > m_max,
// from the closed-form resolvent estimate. Infinity when the bound does not
// apply (lambda too close to the disk around 4, or |Im lambda| beyond the
// examined blocks).
double tail_block_bound(std::size_t m_max, Complex lambda) {
    const double dist4 = std::abs(lambda - Complex{4.0, 0.0});
    if (dist4 <= 1.0) return std::numeric_limits<double>::infinity();
    const double bound0 = 1.0 / (dist4 - 1.0);
    const double gap = static_cast<double>(m_max + 1) - std::abs(lambda.imag());
    if (gap <= 0.0) return std::numeric_limits<double>::infinity();
    const double d_tail = std::hypot(lambda.real(), gap);
    if (d_tail <= 1.0) return std::numeric_limits<double>::infinity();
    return std::max(bound0, 1.0 / (d_tail - 1.0));
}

}  // namespace

modeop::ResolventReport d_resolvent_norm(const DirectSumOperator& op, Complex lambda) {
    if (op.m_max == 0) throw std::invalid_argument("m_max must be >= 1");
    check_excluded(lambda);

    modeop::ResolventReport best;
    best.lambda = lambda;
    best.norm = -1.0;
    bool all_certified = true;
    double radius = 0.0;
    for (std::size_t m = 1; m <= op.m_max; ++m) {
        const auto rep = modeop::bm_resolvent_norm(modeop::ModeOperator{m}, lambda);
        all_certified = all_certified && rep.certified;
        radius = std::max(radius, rep.pruning_radius);
        const bool better =
            rep.norm > best.norm ||
            (rep.norm == best.norm && std::abs(rep.attained.mode_n) < std::abs(best.attained.mode_n));
        if (better) {
            best.norm = rep.norm;
            best.attained = rep.attained;
        }
    }
    best.pruning_radius = radius;
    const double tail = tail_block_bound(op.m_max, lambda);
    if (std::isfinite(tail)) best.tail_bound = tail;
    best.certified = all_certified && std::isfinite(tail);
    return best;
}

const char* to_string(CertStatus s) {
    switch (s) {
        case CertStatus::certified: return "true";
        case CertStatus::uncertified: return "false";
        case CertStatus::skipped: return "skipped";
    }
    return "false";
}

std::string ScanTable::to_csv() const {
    std::ostringstream os;
    os << "re,im,norm,attained_M,attained_n,certified\n";
    for (const auto& r : rows) {
        os << fmt_double(r.lambda.real()) << ',' << fmt_double(r.lambda.imag()) << ','
           << fmt_double(r.norm) << ',' << r.attained_m << ',' << r.attained_n << ','
           << to_string(r.status) << '\n';
    }
    return os.str();
}

std::string ScanTable::to_json() const {
    nlohmann::json j;
    j["m_max"] = m_max;
    j["grid"] = grid_desc;
    if (!interpretation.empty()) j["interpretation"] = interpretation;
    auto rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row;
        row["re"] = r.lambda.real();
        row["im"] = r.lambda.imag();
        if (r.status == CertStatus::skipped) {
            row["skipped"] = true;
        } else {
            row["norm"] = r.norm;
            row["attained_M"] = r.attained_m;
            row["attained_n"] = r.attained_n;
            row["certified"] = (r.status == CertStatus::certified);
        }
        rows_json.push_back(std::move(row));
    }
    j["rows"] = std::move(rows_json);
    return j.dump();
}

namespace {

// Distance from lambda to the enclosure {|z - 4| <= 1} union i*Z \ {0}.
double enclosure_distance(Complex lambda) {
    double d = std::abs(lambda - Complex{4.0, 0.0}) - 1.0;
    const long k0 = std::lround(lambda.imag());
    for (long k = k0 - 1; k <= k0 + 1; ++k) {
        if (k == 0) continue;
        d = std::min(d, std::abs(lambda - Complex{0.0, static_cast<double>(k)}));
    }
    if (k0 == 0) {
        d = std::min(d, std::abs(lambda - Complex{0.0, 1.0}));
        d = std::min(d, std::abs(lambda - Complex{0.0, -1.0}));
    }
    return d;
}

}  // namespace

ScanTable spectrum_enclosure_report(const DirectSumOperator& op, std::vector<Complex> grid) {
    std::sort(grid.begin(), grid.end(), [](Complex a, Complex b) {
        if (a.imag() != b.imag()) return a.imag() < b.imag();
        return a.real() < b.real();
    });
    ScanTable table;
    table.m_max = op.m_max;
    table.grid_desc = "user grid, " + std::to_string(grid.size()) + " points";
    for (const Complex lambda : grid) {
        ScanRow row;
        row.lambda = lambda;
        if (enclosure_distance(lambda) < 0.1) {
            row.norm = std::numeric_limits<double>::quiet_NaN();
            row.status = CertStatus::skipped;
        } else {
            const auto rep = d_resolvent_norm(op, lambda);
            row.norm = rep.norm;
            row.attained_m = rep.attained.block_m;
            row.attained_n = rep.attained.mode_n;
            row.status = rep.certified ? CertStatus::certified : CertStatus::uncertified;
        }
        table.rows.push_back(row);
    }
    return table;
}

ScanTable blowup_scan(const DirectSumOperator& op) {
    if (op.m_max < 4) throw std::invalid_argument("blowup_scan requires m_max >= 4");
    ScanTable table;
    table.m_max = op.m_max;
    table.grid_desc = "lambda = 1 + i k, k = 1.." + std::to_string(op.m_max);
    double running = 0.0;
    for (std::size_t k = 1; k <= op.m_max; ++k) {
        const Complex lambda{1.0, static_cast<double>(k)};
        const auto rep = d_resolvent_norm(op, lambda);
        ScanRow row;
        row.lambda = lambda;
        row.norm = rep.norm;
        row.attained_m = rep.attained.block_m;
        row.attained_n = rep.attained.mode_n;
        row.status = rep.certified ? CertStatus::certified : CertStatus::uncertified;
        table.rows.push_back(row);
        running = std::max(running, rep.norm);
    }
    std::ostringstream os;
    os << "resolvent norms on the line Re(lambda) = 1 reach " << fmt_double(running)
       << " by k = " << op.m_max << " and pass sqrt(k) at every k, although the whole line "
       << "lies in the resolvent set; they grow without bound as m_max increases. "
       << "By the Gearhart-Pruss criterion (cited, not recomputed here) e^{2pi} therefore "
       << "belongs to the spectrum of the time-2pi semigroup operator: the generator's "
       << "spectrum does not determine the dichotomy.";
    table.interpretation = os.str();
    return table;
}

bool blowup_growth_holds(const ScanTable& table, double tol) {
    double running = 0.0;
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const auto& row = table.rows[k];
        if (row.status != CertStatus::certified) return false;
        running = std::max(running, row.norm);
        if (running < std::sqrt(static_cast<double>(k + 1)) - tol) return false;
    }
    return true;
}

}  // namespace semistab::directsum
