#include "semistab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "semistab/rng.hpp"

namespace semistab::lattice {

VectorFamily::VectorFamily(std::vector<CVector> vectors, double p)
    : vectors_(std::move(vectors)), p_(p) {
    if (vectors_.empty()) throw std::invalid_argument("family must contain at least one vector");
    if (!(p_ >= 1.0) || !std::isfinite(p_)) throw std::invalid_argument("p must lie in [1, inf)");
    const std::size_t d = vectors_.front().size();
    if (d == 0) throw std::invalid_argument("vectors must be nonempty");
    for (const auto& v : vectors_) {
        if (v.size() != d) throw std::invalid_argument("dimension mismatch");
    }
}

double VectorFamily::q() const {
    if (p_ == 1.0) return std::numeric_limits<double>::infinity();
    return p_ / (p_ - 1.0);
}

std::vector<double> pvector_norm(const VectorFamily& fam) {
    const std::size_t d = fam.dim();
    const double p = fam.p();
    std::vector<double> out(d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < fam.count(); ++k) {
            const double a = std::abs(fam.vec(k)[j]);
            if (a != 0.0) s += std::pow(a, p);
        }
        out[j] = s == 0.0 ? 0.0 : std::pow(s, 1.0 / p);
    }
    return out;
}

double krivine_margin(const numlin::NonnegMatrix& p_mat, const VectorFamily& fam) {
    if (p_mat.dim() != fam.dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<CVector> mapped;
    mapped.reserve(fam.count());
    for (std::size_t k = 0; k < fam.count(); ++k) mapped.push_back(p_mat.apply(fam.vec(k)));
    const std::vector<double> lhs = pvector_norm(VectorFamily(std::move(mapped), fam.p()));
    const std::vector<double> rhs = p_mat.apply(pvector_norm(fam));
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < lhs.size(); ++j) margin = std::min(margin, rhs[j] - lhs[j]);
    return margin;
}

std::vector<double> lub_dual_lower(const VectorFamily& fam, std::size_t samples,
                                   std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    const std::size_t d = fam.dim();
    const std::size_t k = fam.count();
    const double p = fam.p();
    const double q = fam.q();
    std::vector<double> out(d, 0.0);

    // sample 0: per-component Hoelder-optimal tuple, recovers the p-sum.
    for (std::size_t j = 0; j < d; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            const double a = std::abs(fam.vec(i)[j]);
            if (a != 0.0) s += std::pow(a, p);
        }
        if (s == 0.0) continue;
        const double nj = std::pow(s, 1.0 / p);
        double val = 0.0;
        if (p == 1.0) {
            for (std::size_t i = 0; i < k; ++i) val += std::abs(fam.vec(i)[j]);
        } else {
            const double denom = std::pow(nj, p - 1.0);
            for (std::size_t i = 0; i < k; ++i) {
                const double a = std::abs(fam.vec(i)[j]);
                if (a != 0.0) val += std::pow(a, p) / denom;
            }
        }
        out[j] = val;
    }

    Rng rng(seed);
    for (std::size_t s = 1; s < samples; ++s) {
        CVector a(k);
        for (auto& x : a) x = rng.gaussian_complex();
        double scale;
        if (p == 1.0) {
            scale = 0.0;
            for (const auto& x : a) scale = std::max(scale, std::abs(x));
        } else {
            double acc = 0.0;
            for (const auto& x : a) acc += std::pow(std::abs(x), q);
            scale = std::pow(acc, 1.0 / q);
        }
        if (scale == 0.0) continue;
        for (auto& x : a) x /= scale;
        for (std::size_t j = 0; j < d; ++j) {
            double val = 0.0;
            for (std::size_t i = 0; i < k; ++i) val += (a[i] * fam.vec(i)[j]).real();
            out[j] = std::max(out[j], val);
        }
    }
    return out;
}

namespace {

struct MinkowskiSides {
    double lhs = 0.0;
    double rhs = 0.0;
};

MinkowskiSides minkowski_sides(const std::vector<std::vector<double>>& g, double p,
                               const std::vector<double>& w_s, const std::vector<double>& w_t) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must lie in [1, inf)");
    const std::size_t ns = g.size();
    if (ns == 0 || ns != w_s.size()) throw std::invalid_argument("dimension mismatch");
    const std::size_t nt = g.front().size();
    if (nt == 0 || nt != w_t.size()) throw std::invalid_argument("dimension mismatch");
    for (const auto& row : g) {
        if (row.size() != nt) throw std::invalid_argument("dimension mismatch");
        for (const double x : row) {
            if (!(x >= 0.0)) throw std::invalid_argument("negative entry");
        }
    }
    for (const double w : w_s) {
        if (!(w >= 0.0)) throw std::invalid_argument("negative entry");
    }
    for (const double w : w_t) {
        if (!(w >= 0.0)) throw std::invalid_argument("negative entry");
    }

    MinkowskiSides sides;
    for (std::size_t s = 0; s < ns; ++s) {
        double inner = 0.0;
        for (std::size_t t = 0; t < nt; ++t) inner += w_t[t] * std::pow(g[s][t], p);
        sides.lhs += w_s[s] * std::pow(inner, 1.0 / p);
    }
    double outer = 0.0;
    for (std::size_t t = 0; t < nt; ++t) {
        double col = 0.0;
        for (std::size_t s = 0; s < ns; ++s) col += w_s[s] * g[s][t];
        outer += w_t[t] * std::pow(col, p);
    }
    sides.rhs = std::pow(outer, 1.0 / p);
    return sides;
}

}  // namespace

double minkowski_margin(const std::vector<std::vector<double>>& g, double p,
                        const std::vector<double>& w_s, const std::vector<double>& w_t) {
    const auto sides = minkowski_sides(g, p, w_s, w_t);
    return sides.lhs - sides.rhs;
}

std::string InequalityReport::to_json() const {
    nlohmann::json j;
    j["trials"] = trials;
    j["seed"] = seed;
    j["worst_margin"] = worst_margin;
    if (!witness_json.empty()) j["witness"] = nlohmann::json::parse(witness_json);
    return j.dump();
}

std::string DualConsistencyReport::to_json() const {
    nlohmann::json j;
    j["trials"] = trials;
    j["seed"] = seed;
    j["worst_rel_gap"] = worst_rel_gap;
    return j.dump();
}

namespace {

constexpr double kKrivinePs[] = {1.0, 1.5, 2.0, 3.0, 10.0};

struct KrivineTrial {
    numlin::NonnegMatrix p_mat;
    VectorFamily fam;
    double scale;
};

KrivineTrial make_krivine_trial(std::uint64_t seed, std::uint64_t trial, bool p_above_one) {
    Rng rng = Rng::for_trial(seed, trial);
    const std::size_t d = 1 + rng.uniform_index(0, 5);
    const std::size_t k = 1 + rng.uniform_index(0, 4);
    double p = kKrivinePs[rng.uniform_index(0, 4)];
    if (p_above_one && p == 1.0) p = 2.0;
    std::vector<double> entries(d * d);
    for (auto& x : entries) x = rng.uniform01();
    numlin::NonnegMatrix p_mat(d, std::move(entries));
    std::vector<CVector> vecs(k, CVector(d));
    double max_norm = 0.0;
    for (auto& v : vecs) {
        for (auto& x : v) x = rng.gaussian_complex();
        max_norm = std::max(max_norm, norm2(v));
    }
    const double scale = std::max(p_mat.one_norm() * max_norm, 1e-300);
    return KrivineTrial{std::move(p_mat), VectorFamily(std::move(vecs), p), scale};
}

std::string krivine_witness(const KrivineTrial& t, std::uint64_t seed, std::uint64_t trial,
                            double margin) {
    nlohmann::json w;
    w["trial"] = trial;
    w["seed"] = seed;
    w["p"] = t.fam.p();
    w["margin"] = margin;
    w["P"] = nlohmann::json::parse(t.p_mat.as_cmatrix().to_json());
    auto vecs = nlohmann::json::array();
    for (const auto& v : t.fam.vectors()) {
        auto jv = nlohmann::json::array();
        for (const auto& x : v) jv.push_back({x.real(), x.imag()});
        vecs.push_back(std::move(jv));
    }
    w["f"] = std::move(vecs);
    return w.dump();
}

}  // namespace

InequalityReport krivine_suite(std::size_t trials, std::uint64_t seed) {
    InequalityReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (std::uint64_t t = 0; t < trials; ++t) {
        const KrivineTrial trial = make_krivine_trial(seed, t, false);
        const double margin = krivine_margin(trial.p_mat, trial.fam);
        const double normalized = margin / trial.scale;
        if (normalized < rep.worst_margin) {
            rep.worst_margin = normalized;
            if (normalized < -1e-10) rep.witness_json = krivine_witness(trial, seed, t, margin);
        }
    }
    if (trials == 0) rep.worst_margin = 0.0;
    return rep;
}

DualConsistencyReport dual_consistency_suite(std::size_t trials, std::uint64_t seed) {
    DualConsistencyReport rep;
    rep.trials = trials;
    rep.seed = seed;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const KrivineTrial trial = make_krivine_trial(seed, t, true);
        const std::vector<double> pv = pvector_norm(trial.fam);
        const std::vector<double> lb = lub_dual_lower(trial.fam, 1, seed);
        for (std::size_t j = 0; j < pv.size(); ++j) {
            const double gap = std::abs(pv[j] - lb[j]) / std::max(pv[j], 1e-300);
            rep.worst_rel_gap = std::max(rep.worst_rel_gap, gap);
        }
    }
    return rep;
}

InequalityReport minkowski_suite(std::size_t trials, std::uint64_t seed) {
    constexpr double ps[] = {1.0, 2.0, 3.0, 7.0};
    InequalityReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, t);
        const std::size_t ns = 1 + rng.uniform_index(0, 31);
        const std::size_t nt = 1 + rng.uniform_index(0, 31);
        const double p = ps[rng.uniform_index(0, 3)];
        std::vector<std::vector<double>> g(ns, std::vector<double>(nt));
        for (auto& row : g)
            for (auto& x : row) x = rng.uniform01();
        const bool uniform_weights = rng.uniform_index(0, 1) == 0;
        std::vector<double> ws(ns), wt(nt);
        for (auto& w : ws) w = (uniform_weights ? 1.0 : rng.uniform(0.5, 1.5)) / static_cast<double>(ns);
        for (auto& w : wt) w = (uniform_weights ? 1.0 : rng.uniform(0.5, 1.5)) / static_cast<double>(nt);
        const auto sides = minkowski_sides(g, p, ws, wt);
        const double scale = std::max({sides.lhs, sides.rhs, 1e-300});
        const double normalized = (sides.lhs - sides.rhs) / scale;
        if (normalized < rep.worst_margin) {
            rep.worst_margin = normalized;
            if (normalized < -1e-10) {
                nlohmann::json w;
                w["trial"] = t;
                w["seed"] = seed;
                w["p"] = p;
                w["rows"] = ns;
                w["cols"] = nt;
                w["margin"] = sides.lhs - sides.rhs;
                rep.witness_json = w.dump();
            }
        }
    }
    if (trials == 0) rep.worst_margin = 0.0;
    return rep;
}

}  // namespace semistab::lattice
