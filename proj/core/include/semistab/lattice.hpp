#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "semistab/complex_matrix.hpp"
#include "semistab/numlin.hpp"

namespace semistab::lattice {

/// A finite family f_1..f_k of complex vectors of common dimension together
/// with an exponent p in [1, inf). The sigma-finite measure space is modeled
/// as a finite set with counting measure; k plays the role of the number of
/// simple-function pieces.
class VectorFamily {
public:
    VectorFamily(std::vector<CVector> vectors, double p);

    std::size_t count() const { return vectors_.size(); }
    std::size_t dim() const { return vectors_.empty() ? 0 : vectors_.front().size(); }
    double p() const { return p_; }
    /// Conjugate exponent 1/p + 1/q = 1; infinity when p = 1.
    double q() const;
    const CVector& vec(std::size_t k) const { return vectors_[k]; }
    const std::vector<CVector>& vectors() const { return vectors_; }

private:
    std::vector<CVector> vectors_;
    double p_;
};

/// Componentwise (sum_k |f_k(j)|^p)^{1/p}.
std::vector<double> pvector_norm(const VectorFamily& fam);

/// min over components of P((sum |f_k|^p)^{1/p}) - (sum |P f_k|^p)^{1/p}.
/// Nonnegative (within rounding) for every positive P: the finite form of
/// the lattice p-norm inequality.
double krivine_margin(const numlin::NonnegMatrix& p_mat, const VectorFamily& fam);

/// Componentwise max of sum_k Re(a_k f_k(j)) over sampled dual tuples with
/// sum |a_k|^q <= 1 (max |a_k| <= 1 when p = 1). Sample 0 is always the
/// deterministic Hoelder-optimal tuple, so the result matches pvector_norm
/// there and random samples can only stay below it.
std::vector<double> lub_dual_lower(const VectorFamily& fam, std::size_t samples,
                                   std::uint64_t seed);

/// Weighted two-way grid form of the integral Minkowski inequality:
///   sum_s ws (sum_t wt g^p)^{1/p}  -  (sum_t wt (sum_s ws g)^p)^{1/p}.
/// Nonnegative for nonnegative g and weights.
double minkowski_margin(const std::vector<std::vector<double>>& g, double p,
                        const std::vector<double>& w_s, const std::vector<double>& w_t);

/// Seeded randomized-suite outcome. worst_margin is the most negative margin
/// across trials, normalized by the trial scale, so the pass condition is
/// simply worst_margin >= -1e-10. The witness (inputs of the worst trial) is
/// attached only when that bound is violated.
struct InequalityReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double worst_margin = 0.0;
    std::string witness_json;  // empty unless a violation occurred

    std::string to_json() const;
};

/// 500-trial default suite: d <= 6, k <= 5, p in {1, 1.5, 2, 3, 10},
/// P uniform in [0,1], f_k complex gaussian; per-trial streams derived from
/// (seed, trial).
InequalityReport krivine_suite(std::size_t trials, std::uint64_t seed);

/// Random nonnegative grids up to 32x32, p in {1, 2, 3, 7}.
InequalityReport minkowski_suite(std::size_t trials, std::uint64_t seed);

struct DualConsistencyReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double worst_rel_gap = 0.0;

    std::string to_json() const;
};

/// Checks that the dual representation at the Hoelder-optimal coefficients
/// recovers pvector_norm componentwise (p > 1 trials).
DualConsistencyReport dual_consistency_suite(std::size_t trials, std::uint64_t seed);

}  // namespace semistab::lattice
