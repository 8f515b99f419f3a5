#include "semistab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "semistab/numlin.hpp"
#include "semistab/quadrature.hpp"
#include "semistab/rng.hpp"

namespace semistab::dynamics {

using quad::kTwoPi;

namespace {

bool matrix_is_metzler(const CMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).imag() != 0.0) return false;
            if (i != j && a(i, j).real() < 0.0) return false;
        }
    }
    return true;
}

}  // namespace

GeneratorSpec GeneratorSpec::make(CMatrix a) {
    if (!a.is_square()) throw std::invalid_argument("generator must be square");
    if (a.rows() == 0) throw std::invalid_argument("empty matrix");
    if (!a.all_finite()) throw std::invalid_argument("generator must be finite");
    const PositivityClass c = matrix_is_metzler(a) ? PositivityClass::metzler_positive_semigroup
                                                   : PositivityClass::general;
    return GeneratorSpec(std::move(a), c);
}

GeneratorSpec GeneratorSpec::make(CMatrix a, PositivityClass requested) {
    GeneratorSpec spec = make(std::move(a));
    if (requested == PositivityClass::metzler_positive_semigroup && !spec.is_metzler())
        throw std::invalid_argument("matrix is not metzler (real with nonnegative off-diagonal)");
    spec.class_ = requested;
    return spec;
}

GeneratorSpec GeneratorSpec::shifted(Complex sigma) const {
    CMatrix b = a_;
    for (std::size_t i = 0; i < b.rows(); ++i) b(i, i) -= sigma;
    const PositivityClass c =
        (sigma.imag() == 0.0) ? class_ : PositivityClass::general;
    return GeneratorSpec(std::move(b), c);
}

std::string GrowthEstimate::to_json() const {
    nlohmann::json j;
    j["omega_hat"] = omega_hat;
    j["s_value"] = s_value;
    auto arr = nlohmann::json::array();
    for (const auto& [t, logn] : samples) arr.push_back({t, logn});
    j["samples"] = std::move(arr);
    return j.dump();
}

GrowthEstimate growth_estimate(const GeneratorSpec& spec, double t_max, std::size_t n_samples) {
    if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
    if (n_samples < 8) throw std::invalid_argument("n_samples must be >= 8");
    GrowthEstimate est;
    est.s_value = numlin::spectral_bound(spec.matrix());
    if (est.s_value * t_max > 700.0)
        throw std::runtime_error(
            "norm overflow: log||e^{tA}|| exceeds 700; rescale the generator (A -> A - sigma I)");
    est.samples.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double t = t_max * static_cast<double>(i + 1) / static_cast<double>(n_samples);
        const CMatrix e = numlin::expm(spec.matrix(), t);
        if (!e.all_finite())
            throw std::runtime_error(
                "norm overflow: log||e^{tA}|| exceeds 700; rescale the generator (A -> A - sigma I)");
        const double nrm = numlin::op_norm2(e);
        const double logn = std::log(nrm);
        if (!(logn <= 700.0))
            throw std::runtime_error(
                "norm overflow: log||e^{tA}|| exceeds 700; rescale the generator (A -> A - sigma I)");
        est.samples.emplace_back(t, logn);
    }
    // least-squares slope over the top half of the grid
    const std::size_t lo = n_samples / 2;
    double t_mean = 0.0, y_mean = 0.0;
    const double count = static_cast<double>(n_samples - lo);
    for (std::size_t i = lo; i < n_samples; ++i) {
        t_mean += est.samples[i].first;
        y_mean += est.samples[i].second;
    }
    t_mean /= count;
    y_mean /= count;
    double num = 0.0, den = 0.0;
    for (std::size_t i = lo; i < n_samples; ++i) {
        const double dt = est.samples[i].first - t_mean;
        num += dt * (est.samples[i].second - y_mean);
        den += dt * dt;
    }
    est.omega_hat = num / den;
    return est;
}

double laplace_check(const GeneratorSpec& spec, Complex lambda, const std::vector<double>& g,
                     double horizon, std::size_t steps) {
    if (!spec.is_metzler())
        throw std::invalid_argument("laplace_check requires the metzler-positive-semigroup class");
    const std::size_t n = spec.dim();
    if (g.size() != n) throw std::invalid_argument("dimension mismatch");
    for (const double x : g) {
        if (!(x >= 0.0)) throw std::invalid_argument("g must be entrywise nonnegative");
    }
    if (steps < 8) throw std::invalid_argument("steps must be >= 8");
    const double s = numlin::spectral_bound(spec.matrix());
    if (lambda.real() < s + 0.1 - 1e-9)
        throw std::invalid_argument("lambda too close to spectral bound");
    if (!(horizon > 0.0) || (s - lambda.real()) * horizon > std::log(1e-10) + 1e-6)
        throw std::invalid_argument("horizon too short: dropped tail would exceed 1e-10");

    CVector gc(n);
    for (std::size_t i = 0; i < n; ++i) gc[i] = g[i];

    const std::size_t panels = std::max<std::size_t>(1, steps / 8);
    const double width = horizon / static_cast<double>(panels);
    std::array<CMatrix, 8> node_exp;
    for (std::size_t j = 0; j < 8; ++j)
        node_exp[j] = numlin::expm(spec.matrix(), width * quad::kGl8Nodes[j]);
    const CMatrix panel_exp = numlin::expm(spec.matrix(), width);

    CVector acc(n, Complex{0.0, 0.0});
    CVector at_start = gc;  // e^{aA} g at the current panel start
    for (std::size_t ip = 0; ip < panels; ++ip) {
        const double a = width * static_cast<double>(ip);
        for (std::size_t j = 0; j < 8; ++j) {
            const double sj = a + width * quad::kGl8Nodes[j];
            const Complex factor =
                std::exp(-lambda * sj) * (width * quad::kGl8Weights[j]);
            const CVector v = node_exp[j].apply(at_start);
            for (std::size_t i = 0; i < n; ++i) acc[i] += factor * v[i];
        }
        at_start = panel_exp.apply(at_start);
    }

    const CVector x = numlin::resolvent_apply(spec.matrix(), lambda, gc);
    CVector diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = acc[i] - x[i];
    return norm2(diff) / norm2(x);
}

StepFunction StepFunction::make(std::vector<double> breaks,
                                std::vector<std::vector<double>> values) {
    if (values.empty()) throw std::invalid_argument("step function needs at least one piece");
    if (breaks.size() != values.size() + 1)
        throw std::invalid_argument("breaks must have one more entry than values");
    if (std::abs(breaks.front()) > 1e-9 || std::abs(breaks.back() - kTwoPi) > 1e-9)
        throw std::invalid_argument("breaks must start at 0 and end at 2*pi");
    breaks.front() = 0.0;
    breaks.back() = kTwoPi;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (!(breaks[i] < breaks[i + 1])) throw std::invalid_argument("breaks must increase");
    }
    const std::size_t d = values.front().size();
    if (d == 0) throw std::invalid_argument("step values must be nonempty vectors");
    for (const auto& v : values) {
        if (v.size() != d) throw std::invalid_argument("dimension mismatch");
        for (const double x : v) {
            if (!std::isfinite(x)) throw std::invalid_argument("step values must be finite");
        }
    }
    StepFunction f;
    f.breaks = std::move(breaks);
    f.values = std::move(values);
    return f;
}

StepFunction StepFunction::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed step-function JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("breaks") || !j.contains("values"))
        throw std::invalid_argument("step-function JSON must have fields breaks, values");
    std::vector<double> breaks = j.at("breaks").get<std::vector<double>>();
    std::vector<std::vector<double>> values =
        j.at("values").get<std::vector<std::vector<double>>>();
    return make(std::move(breaks), std::move(values));
}

std::string StepFunction::to_json() const {
    nlohmann::json j;
    j["breaks"] = breaks;
    j["values"] = values;
    return j.dump();
}

const std::vector<double>& StepFunction::at(double t) const {
    double u = t - kTwoPi * std::floor(t / kTwoPi);
    if (u >= kTwoPi) u = 0.0;
    auto it = std::upper_bound(breaks.begin(), breaks.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - breaks.begin());
    if (idx == 0) idx = 1;
    idx = std::min(idx - 1, values.size() - 1);
    return values[idx];
}

std::string ConvolutionResult::to_json() const {
    nlohmann::json j;
    j["margin"] = margin;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["tol_quad"] = tol_quad;
    return j.dump();
}

namespace {

// expm cache keyed on the bit pattern of s; within one margin computation the
// panel starts repeat heavily across t when the breaks are grid-aligned.
class ExpmCache {
public:
    explicit ExpmCache(const CMatrix& a) : a_(a) {}

    const CMatrix& at(double s) {
        std::uint64_t key;
        std::memcpy(&key, &s, sizeof(key));
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
        return map_.emplace(key, numlin::expm(a_, s)).first->second;
    }

private:
    const CMatrix& a_;
    std::unordered_map<std::uint64_t, CMatrix> map_;
};

// int_0^N e^{sA} f(t - s) ds, split where t - s crosses a break of f and
// integrated by composite Gauss-Legendre panels within each smooth piece.
// The integrand is analytic there, so the s-error sits far below the
// t-quadrature error that the caller estimates.
CVector convolution_inner(const StepFunction& f, double t, double horizon, double h_target,
                          ExpmCache& cache) {
    std::vector<double> cuts{0.0, horizon};
    for (std::size_t j = 0; j + 1 < f.breaks.size(); ++j) {
        const double base = t - f.breaks[j];
        const double k_lo = std::ceil((base - horizon) / kTwoPi);
        const double k_hi = std::floor(base / kTwoPi);
        for (double k = k_lo; k <= k_hi; k += 1.0) {
            const double s = base - kTwoPi * k;
            if (s > 1e-12 && s < horizon - 1e-12) cuts.push_back(s);
        }
    }
    std::sort(cuts.begin(), cuts.end());

    const std::size_t d = f.dim();
    CVector acc(d, Complex{0.0, 0.0});
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double a = cuts[c];
        const double b = cuts[c + 1];
        if (b - a <= 1e-13) continue;
        const std::vector<double>& v = f.at(t - 0.5 * (a + b));
        CVector w(d);
        for (std::size_t i = 0; i < d; ++i) w[i] = v[i];
        const std::size_t n_loc = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::ceil((b - a) / (8.0 * h_target) - 1e-9)));
        const double width = (b - a) / static_cast<double>(n_loc);
        std::array<const CMatrix*, 8> node_exp;
        for (std::size_t j = 0; j < 8; ++j) node_exp[j] = &cache.at(width * quad::kGl8Nodes[j]);
        const CMatrix& stepper = cache.at(width);
        w = cache.at(a).apply(w);  // e^{aA} v
        for (std::size_t q = 0; q < n_loc; ++q) {
            for (std::size_t j = 0; j < 8; ++j) {
                const CVector e = node_exp[j]->apply(w);
                const double weight = width * quad::kGl8Weights[j];
                for (std::size_t i = 0; i < d; ++i) acc[i] += weight * e[i];
            }
            w = stepper.apply(w);
        }
    }
    return acc;
}

struct ConvolutionSides {
    double lhs = 0.0;
    double rhs_integral = 0.0;  // (int ||f||_p^p dt)^{1/p}
};

ConvolutionSides convolution_sides(const StepFunction& f, double horizon, double p,
                                   std::size_t t_points, ExpmCache& cache) {
    const double h = kTwoPi / static_cast<double>(t_points);
    double acc_lhs = 0.0;
    double acc_rhs = 0.0;
    for (std::size_t i = 0; i < t_points; ++i) {
        const double t = h * static_cast<double>(i);
        const CVector inner = convolution_inner(f, t, horizon, h, cache);
        acc_lhs += std::pow(quad::lp_norm(inner, p), p);
        acc_rhs += std::pow(quad::lp_norm(f.at(t), p), p);
    }
    ConvolutionSides sides;
    sides.lhs = std::pow(acc_lhs * h, 1.0 / p);
    sides.rhs_integral = std::pow(acc_rhs * h, 1.0 / p);
    return sides;
}

}  // namespace

ConvolutionResult convolution_margin(const GeneratorSpec& spec, const StepFunction& f,
                                     double horizon, double p, std::size_t t_points) {
    if (!spec.is_metzler())
        throw std::invalid_argument(
            "convolution_margin requires the metzler-positive-semigroup class");
    if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must lie in [1, inf)");
    if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
    if (t_points < 8) throw std::invalid_argument("t_points must be >= 8");
    if (f.dim() != spec.dim()) throw std::invalid_argument("dimension mismatch");
    const double s = numlin::spectral_bound(spec.matrix());
    if (!(s < -0.05))
        throw std::invalid_argument("spectral bound must be below -0.05 (stable generator)");

    // -A^{-1} = int_0^inf e^{sA} ds is entrywise nonnegative for a stable
    // metzler generator; rounding may leave tiny negatives, clamped here.
    CMatrix neg_inv = numlin::inverse(spec.matrix());
    neg_inv *= Complex{-1.0, 0.0};
    const double clamp = 1e-10 * std::max(1.0, neg_inv.one_norm());
    const numlin::NonnegMatrix inv_nonneg(neg_inv, clamp);
    const double inv_pnorm = numlin::pnorm_nonneg(inv_nonneg, p);

    ExpmCache cache(spec.matrix());
    const ConvolutionSides coarse = convolution_sides(f, horizon, p, t_points, cache);
    const ConvolutionSides fine = convolution_sides(f, horizon, p, 2 * t_points, cache);

    ConvolutionResult res;
    res.lhs = fine.lhs;
    res.rhs = inv_pnorm * fine.rhs_integral;
    res.margin = res.rhs - res.lhs;
    const double margin_coarse = inv_pnorm * coarse.rhs_integral - coarse.lhs;
    const double scale = std::max({res.lhs, res.rhs, 1.0});
    res.tol_quad = (4.0 / 3.0) * std::abs(res.margin - margin_coarse) + 1e-12 * scale;
    return res;
}

std::string HyperbolicityReport::to_json() const {
    nlohmann::json j;
    j["spectrum_clear"] = spectrum_clear;
    if (c_lower) j["c_lower"] = *c_lower;
    if (c_exact_p2) j["c_exact_p2"] = *c_exact_p2;
    j["quad_error"] = quad_error;
    return j.dump();
}

namespace {

// One coefficient family v_{-n}..v_n, stored at index k + n.
using ModeFamily = std::vector<CVector>;

double family_ratio(const std::vector<CMatrix>& resolvents, const ModeFamily& v, long n_modes,
                    double p, std::size_t n_t) {
    const std::size_t d = v.front().size();
    ModeFamily u(v.size());
    for (std::size_t idx = 0; idx < v.size(); ++idx) u[idx] = resolvents[idx].apply(v[idx]);
    const double h = kTwoPi / static_cast<double>(n_t);
    double num = 0.0, den = 0.0;
    CVector su(d), sv(d);
    for (std::size_t it = 0; it < n_t; ++it) {
        const double t = h * static_cast<double>(it);
        std::fill(su.begin(), su.end(), Complex{0.0, 0.0});
        std::fill(sv.begin(), sv.end(), Complex{0.0, 0.0});
        for (long k = -n_modes; k <= n_modes; ++k) {
            const Complex phase = std::polar(1.0, static_cast<double>(k) * t);
            const std::size_t idx = static_cast<std::size_t>(k + n_modes);
            for (std::size_t i = 0; i < d; ++i) {
                su[i] += phase * u[idx][i];
                sv[i] += phase * v[idx][i];
            }
        }
        num += std::pow(quad::lp_norm(su, p), p);
        den += std::pow(quad::lp_norm(sv, p), p);
    }
    if (den == 0.0) return 0.0;
    return std::pow(num / den, 1.0 / p);
}

}  // namespace

HyperbolicityReport hyperbolicity_constant(const GeneratorSpec& spec, long n_modes, double p,
                                           std::size_t quad_points, std::size_t trials,
                                           std::uint64_t seed) {
    if (n_modes < 0) throw std::invalid_argument("n_modes must be >= 0");
    if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must lie in [1, inf)");
    HyperbolicityReport rep;
    const auto eig = numlin::eigenvalues(spec.matrix());
    for (long k = -n_modes; k <= n_modes; ++k) {
        for (const Complex& z : eig) {
            if (std::abs(z - Complex{0.0, static_cast<double>(k)}) <= 1e-6) return rep;
        }
    }
    rep.spectrum_clear = true;

    const std::size_t d = spec.dim();
    std::vector<CMatrix> resolvents;
    resolvents.reserve(2 * n_modes + 1);
    for (long k = -n_modes; k <= n_modes; ++k) {
        CMatrix m = CMatrix::identity(d);
        m *= Complex{0.0, static_cast<double>(k)};
        m -= spec.matrix();
        resolvents.push_back(numlin::inverse(m));
    }

    // Parseval maximizer: the injected family concentrates on the mode with
    // the largest resolvent 2-norm, in its top right-singular direction.
    double sigma_star = -1.0;
    std::size_t idx_star = 0;
    CVector v_star;
    for (std::size_t idx = 0; idx < resolvents.size(); ++idx) {
        const auto detail = numlin::op_norm2_detail(resolvents[idx]);
        if (detail.norm > sigma_star) {
            sigma_star = detail.norm;
            idx_star = idx;
            v_star = detail.right_singular;
        }
    }
    if (p == 2.0) rep.c_exact_p2 = sigma_star;

    std::size_t n_t = std::max<std::size_t>(quad_points, 4 * static_cast<std::size_t>(n_modes) + 2);
    n_t = std::max<std::size_t>(n_t, 8);

    double c_lower = 0.0;
    double worst_est = 0.0;
    Rng rng(seed);
    for (std::size_t fam = 0; fam <= trials; ++fam) {
        ModeFamily v(2 * n_modes + 1, CVector(d, Complex{0.0, 0.0}));
        if (fam == 0) {
            v[idx_star] = v_star;
        } else {
            for (auto& vk : v)
                for (auto& x : vk) x = rng.gaussian_complex();
        }
        const double r1 = family_ratio(resolvents, v, n_modes, p, n_t);
        const double r2 = family_ratio(resolvents, v, n_modes, p, 2 * n_t);
        const double est = std::abs(r2 - r1);
        worst_est = std::max(worst_est, est);
        if (est > 0.01 * std::max(r2, 1e-300))
            throw std::runtime_error("quadrature grid too coarse for the requested ratio; retry with quad >= " +
                                     std::to_string(4 * n_t));
        c_lower = std::max(c_lower, r2);
    }
    rep.c_lower = c_lower;
    rep.quad_error = worst_est;
    return rep;
}

std::string LaplaceSuiteReport::to_json() const {
    nlohmann::json j;
    j["trials"] = trials;
    j["seed"] = seed;
    j["worst_rel_error"] = worst_rel_error;
    return j.dump();
}

LaplaceSuiteReport laplace_suite(std::size_t trials, std::uint64_t seed) {
    LaplaceSuiteReport rep;
    rep.trials = trials;
    rep.seed = seed;
    const Complex grid[] = {Complex{-0.9, 0.0}, Complex{-0.5, 0.5}, Complex{0.0, 0.0},
                            Complex{1.0, 2.0}, Complex{3.0, 0.0}};
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, t);
        const std::size_t d = 2 + rng.uniform_index(0, 4);
        CMatrix pm(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) pm(i, j) = rng.uniform01();
        const double rho = numlin::spectral_bound(pm);
        CMatrix a = pm;
        for (std::size_t i = 0; i < d; ++i) a(i, i) -= rho + 1.0;
        const GeneratorSpec spec =
            GeneratorSpec::make(a, PositivityClass::metzler_positive_semigroup);
        const double s = numlin::spectral_bound(a);
        std::vector<double> g(d);
        for (auto& x : g) x = rng.uniform01();
        for (const Complex lambda : grid) {
            const double gap = lambda.real() - s;
            const double horizon = 23.5 / gap;
            const double rel = laplace_check(spec, lambda, g, horizon, 4096);
            rep.worst_rel_error = std::max(rep.worst_rel_error, rel);
        }
    }
    return rep;
}

std::string ConvolutionSuiteReport::to_json() const {
    nlohmann::json j;
    j["trials"] = trials;
    j["seed"] = seed;
    j["p"] = p;
    j["worst_margin"] = worst_margin;
    j["max_tol"] = max_tol;
    j["worst_slack"] = worst_slack;
    return j.dump();
}

ConvolutionSuiteReport convolution_suite(std::size_t trials, std::uint64_t seed, double p) {
    ConvolutionSuiteReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.p = p;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    rep.worst_slack = std::numeric_limits<double>::infinity();
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, t);
        const std::size_t d = 1 + rng.uniform_index(0, 3);
        CMatrix pm(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) pm(i, j) = rng.uniform01();
        const double rho = numlin::spectral_bound(pm);
        CMatrix a = pm;
        const double shift = rho + 1.0 + rng.uniform01();
        for (std::size_t i = 0; i < d; ++i) a(i, i) -= shift;
        const GeneratorSpec spec =
            GeneratorSpec::make(a, PositivityClass::metzler_positive_semigroup);

        std::vector<double> breaks(9);
        for (std::size_t j = 0; j <= 8; ++j) breaks[j] = kTwoPi * static_cast<double>(j) / 8.0;
        std::vector<std::vector<double>> values(8, std::vector<double>(d));
        for (auto& v : values)
            for (auto& x : v) x = rng.uniform(-1.0, 1.0);
        const StepFunction f = StepFunction::make(std::move(breaks), std::move(values));

        const auto res = convolution_margin(spec, f, 2.0 * kTwoPi, p, 64);
        rep.worst_margin = std::min(rep.worst_margin, res.margin);
        rep.max_tol = std::max(rep.max_tol, res.tol_quad);
        rep.worst_slack = std::min(rep.worst_slack, res.margin + res.tol_quad);
    }
    if (trials == 0) {
        rep.worst_margin = 0.0;
        rep.worst_slack = 0.0;
    }
    return rep;
}

std::string HyperbolicitySuiteReport::to_json() const {
    nlohmann::json j;
    j["trials"] = trials;
    j["seed"] = seed;
    j["min_ratio"] = min_ratio;
    j["max_ratio"] = max_ratio;
    return j.dump();
}

HyperbolicitySuiteReport hyperbolicity_suite(std::size_t trials, std::uint64_t seed,
                                             long n_modes, std::size_t families) {
    HyperbolicitySuiteReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.min_ratio = std::numeric_limits<double>::infinity();
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, t);
        HyperbolicityReport hr;
        for (int attempt = 0; attempt < 16; ++attempt) {
            const std::size_t d = 1 + rng.uniform_index(0, 5);
            CMatrix a(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) a(i, j) = rng.gaussian();
            hr = hyperbolicity_constant(GeneratorSpec::make(a), n_modes, 2.0, 0, families,
                                        seed ^ (t * 0x9e3779b9u + attempt));
            if (hr.spectrum_clear) break;
        }
        if (!hr.spectrum_clear) continue;
        const double ratio = *hr.c_lower / *hr.c_exact_p2;
        rep.min_ratio = std::min(rep.min_ratio, ratio);
        rep.max_ratio = std::max(rep.max_ratio, ratio);
    }
    if (trials == 0) rep.min_ratio = 0.0;
    return rep;
}

std::string GrowthSuiteReport::to_json() const {
    nlohmann::json j;
    j["trials"] = trials;
    j["seed"] = seed;
    j["worst_deviation"] = worst_deviation;
    j["tolerance"] = tolerance;
    return j.dump();
}

GrowthSuiteReport growth_suite(std::size_t trials, std::uint64_t seed, double t_max,
                               std::size_t n_samples) {
    GrowthSuiteReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.tolerance = std::max(0.05, 10.0 / t_max);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, t);
        const std::size_t d = 1 + rng.uniform_index(0, 7);
        CMatrix g(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) g(i, j) = rng.gaussian();
        const double s0 = numlin::spectral_bound(g);
        const double target = rng.uniform(-1.5, 1.5);
        for (std::size_t i = 0; i < d; ++i) g(i, i) -= s0 - target;
        const auto est = growth_estimate(GeneratorSpec::make(g), t_max, n_samples);
        rep.worst_deviation =
            std::max(rep.worst_deviation, std::abs(est.omega_hat - est.s_value));
    }
    return rep;
}

}  // namespace semistab::dynamics
