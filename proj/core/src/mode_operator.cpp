#include "semistab/mode_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "semistab/numlin.hpp"
#include "semistab/shift_block.hpp"

namespace semistab::modeop {

Complex mode_shift(std::size_t m, long n) {
    if (m == 0) throw std::invalid_argument("block dimension must be >= 1");
    if (n == 0) return Complex{4.0, 0.0};
    return Complex{0.0, static_cast<double>(n) * static_cast<double>(m)};
}

std::string ResolventReport::to_json() const {
    nlohmann::json j;
    j["lambda"] = {lambda.real(), lambda.imag()};
    j["norm"] = norm;
    j["attained"] = {{"M", attained.block_m}, {"n", attained.mode_n}};
    j["pruning_radius"] = pruning_radius;
    j["certified"] = certified;
    if (tail_bound) j["tail_bound"] = *tail_bound;
    return j.dump();
}

namespace {

// Modes n != 0 with |lambda - i n M| < R form an integer interval.
struct ModeWindow {
    long lo = 1, hi = 0;  // empty when lo > hi
    bool contains(long n) const { return n >= lo && n <= hi; }
};

ModeWindow modes_within(std::size_t m, Complex lambda, double radius) {
    ModeWindow w;
    const double rsq = radius * radius - lambda.real() * lambda.real();
    if (rsq <= 0.0) return w;
    const double half = std::sqrt(rsq);
    const double dm = static_cast<double>(m);
    w.lo = static_cast<long>(std::ceil((lambda.imag() - half) / dm));
    w.hi = static_cast<long>(std::floor((lambda.imag() + half) / dm));
    return w;
}

double mode_distance(std::size_t m, Complex lambda, long n) {
    return std::abs(lambda - Complex{0.0, static_cast<double>(n) * static_cast<double>(m)});
}

}  // namespace

ResolventReport bm_resolvent_norm(const ModeOperator& op, Complex lambda) {
    const std::size_t m = op.m;
    if (m == 0) throw std::invalid_argument("block dimension must be >= 1");
    if (std::abs(lambda - Complex{4.0, 0.0}) <= 1e-8)
        throw std::invalid_argument("lambda in sigma(B_M)");
    const long nearest = std::lround(lambda.imag() / static_cast<double>(m));
    if (nearest != 0 && mode_distance(m, lambda, nearest) <= 1e-8)
        throw std::invalid_argument("lambda in sigma(B_M)");

    ResolventReport rep;
    rep.lambda = lambda;
    rep.attained.block_m = m;

    double radius = 2.0;
    while (true) {
        const ModeWindow win = modes_within(m, lambda, radius);
        // examined set: the mean mode plus the window, ordered by |n| so the
        // deterministic tie-break (smaller |n| wins) falls out of the scan.
        std::vector<long> examined{0};
        for (long k = 1;; ++k) {
            const bool pos = win.contains(k);
            const bool neg = win.contains(-k);
            if (pos) examined.push_back(k);
            if (neg) examined.push_back(-k);
            if (!pos && !neg && (k > std::abs(win.lo)) && (k > std::abs(win.hi))) break;
        }
        const std::size_t mode_count = examined.size();

        double best = -1.0;
        long best_n = 0;
        for (const long n : examined) {
            const Complex z = lambda - mode_shift(m, n);
            const double nrm = shiftblock::resolvent_norm(m, z);
            if (nrm > best) {
                best = nrm;
                best_n = n;
            }
        }

        // Sharpest distance any unexamined mode can achieve: adjacent to the
        // window edges or to the rounding point when the window is empty.
        double d_min = std::numeric_limits<double>::infinity();
        const std::vector<long> candidates = {win.lo - 2, win.lo - 1, win.hi + 1, win.hi + 2,
                                              nearest - 1, nearest,   nearest + 1};
        for (const long n : candidates) {
            if (n == 0 || win.contains(n)) continue;
            d_min = std::min(d_min, mode_distance(m, lambda, n));
        }
        const double tail =
            d_min > 1.0 ? 1.0 / (d_min - 1.0) : std::numeric_limits<double>::infinity();

        rep.norm = best;
        rep.attained.mode_n = best_n;
        rep.pruning_radius = radius;
        rep.tail_bound = std::isfinite(tail) ? std::optional<double>(tail) : std::nullopt;
        rep.certified = tail < best;
        if (rep.certified || mode_count > 64) break;
        radius *= 2.0;
    }
    return rep;
}

double bm_exp_norm(const ModeOperator& op, double t) {
    if (op.m == 0) throw std::invalid_argument("block dimension must be >= 1");
    if (t < 0.0) throw std::invalid_argument("t must be >= 0");
    return std::exp(4.0 * t) * numlin::op_norm2(shiftblock::shift_exp(op.m, t));
}

std::vector<Complex> bm_spectrum_points(const ModeOperator& op, long window) {
    if (op.m == 0) throw std::invalid_argument("block dimension must be >= 1");
    if (window < 0) throw std::invalid_argument("window must be >= 0");
    std::vector<Complex> pts{Complex{4.0, 0.0}};
    const double dm = static_cast<double>(op.m);
    for (long n = 1; n <= window; ++n) {
        pts.push_back(Complex{0.0, dm * static_cast<double>(n)});
        pts.push_back(Complex{0.0, -dm * static_cast<double>(n)});
    }
    return pts;
}

}  // namespace semistab::modeop
