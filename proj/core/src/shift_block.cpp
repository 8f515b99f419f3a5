#include "semistab/shift_block.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "semistab/numlin.hpp"

namespace semistab::shiftblock {

CMatrix make_shift(std::size_t m) {
    if (m == 0) throw std::invalid_argument("shift block dimension must be >= 1");
    CMatrix c(m, m);
    for (std::size_t i = 0; i + 1 < m; ++i) c(i, i + 1) = 1.0;
    return c;
}

CMatrix shift_resolvent(std::size_t m, Complex lambda) {
    if (m == 0) throw std::invalid_argument("shift block dimension must be >= 1");
    if (lambda == Complex{0.0, 0.0}) throw std::invalid_argument("0 is the spectrum of C_M");
    const Complex w = Complex{1.0, 0.0} / lambda;
    // diagonal k carries lambda^{-1-k}
    CVector powers(m);
    powers[0] = w;
    for (std::size_t k = 1; k < m; ++k) powers[k] = powers[k - 1] * w;
    CMatrix r(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) r(i, j) = powers[j - i];
    return r;
}

CMatrix shift_exp(std::size_t m, double t) {
    if (m == 0) throw std::invalid_argument("shift block dimension must be >= 1");
    std::vector<double> diag(m);
    diag[0] = 1.0;
    for (std::size_t k = 1; k < m; ++k) diag[k] = diag[k - 1] * t / static_cast<double>(k);
    CMatrix e(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) e(i, j) = diag[j - i];
    return e;
}

namespace {

std::uint64_t bits_of(double x) {
    std::uint64_t u;
    std::memcpy(&u, &x, sizeof(u));
    return u;
}

// Top singular value of the resolvent Toeplitz matrix. The certified scans
// evaluate this at thousands of (M, lambda) pairs where the top of the
// spectrum of R*R clusters like 1/M^2 and plain power iteration stalls, so
// this runs inverse iteration on c*I - R*R with the Schur bound
// c = ||R||_1 ||R||_inf as shift: both c - sigma1^2 and the spectral gap
// scale the same way, which makes the convergence ratio M-independent.
// Falls back to op_norm2 on the assembled matrix if anything degenerates.
double toeplitz_top_sv(std::size_t m, Complex lambda) {
    const Complex w0 = Complex{1.0, 0.0} / lambda;
    if (m == 1) return std::abs(w0);
    CVector w(m);
    w[0] = w0;
    for (std::size_t d = 1; d < m; ++d) w[d] = w[d - 1] * w0;

    double abs_sum = 0.0;
    for (const auto& x : w) abs_sum += std::abs(x);
    const double c = abs_sum * abs_sum * (1.0 + 1e-12);
    if (!std::isfinite(c)) return numlin::op_norm2(shift_resolvent(m, lambda));

    // G = R^H R along diagonals: G(i, i+d) = sum_{k<=i} conj(w_k) w_{k+d}
    CMatrix g(m, m);
    for (std::size_t d = 0; d < m; ++d) {
        Complex s{0.0, 0.0};
        for (std::size_t i = 0; i + d < m; ++i) {
            s += std::conj(w[i]) * w[i + d];
            g(i, i + d) = s;
            if (d > 0) g(i + d, i) = std::conj(s);
        }
    }
    CMatrix shifted(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            shifted(i, j) = (i == j ? Complex{c, 0.0} : Complex{0.0, 0.0}) - g(i, j);
    const numlin::LuFactor lu(shifted);
    if (lu.singular()) return numlin::op_norm2(shift_resolvent(m, lambda));

    CVector v(m, Complex{1.0, 0.0});
    double nv = norm2(v);
    for (auto& x : v) x /= nv;
    double rho_prev = -1.0;
    for (int it = 0; it < 500; ++it) {
        CVector u = lu.solve(v);
        const double nu = norm2(u);
        if (nu == 0.0 || !std::isfinite(nu)) break;
        for (auto& x : u) x /= nu;
        v = std::move(u);
        const double rho = dot(v, g.apply(v)).real();
        if (!std::isfinite(rho)) break;
        if (rho_prev >= 0.0 && std::abs(rho - rho_prev) <= 1e-14 * rho)
            return std::sqrt(rho);
        rho_prev = rho;
    }
    return numlin::op_norm2(shift_resolvent(m, lambda));
}

}  // namespace

double resolvent_norm(std::size_t m, Complex lambda) {
    if (m == 0) throw std::invalid_argument("shift block dimension must be >= 1");
    if (lambda == Complex{0.0, 0.0}) throw std::invalid_argument("0 is the spectrum of C_M");
    using Key = std::tuple<std::size_t, std::uint64_t, std::uint64_t>;
    static std::map<Key, double> cache;
    static std::mutex mutex;
    const Key key{m, bits_of(lambda.real()), bits_of(lambda.imag())};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const double norm = toeplitz_top_sv(m, lambda);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, norm);
    return norm;
}

BoundsReport shift_bounds_report(std::size_t m, Complex lambda) {
    BoundsReport rep;
    rep.norm = resolvent_norm(m, lambda);
    const double mod = std::abs(lambda);
    if (std::abs(mod - 1.0) <= 1e-12) rep.lower = std::sqrt(static_cast<double>(m));
    if (mod > 1.0) rep.upper = 1.0 / (mod - 1.0);
    if (rep.lower && rep.norm < *rep.lower - 1e-9) rep.violated = true;
    if (rep.upper && rep.norm > *rep.upper + 1e-9) rep.violated = true;
    return rep;
}

std::string BoundsReport::to_json() const {
    nlohmann::json j;
    j["norm"] = norm;
    if (lower) j["lower"] = *lower;
    if (upper) j["upper"] = *upper;
    j["violated"] = violated;
    return j.dump();
}

}  // namespace semistab::shiftblock
