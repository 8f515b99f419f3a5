#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "semistab/complex_matrix.hpp"

namespace semistab::shiftblock {

// The nilpotent shift contraction of dimension M. All four operations are
// pure functions of (M, lambda) or (M, t), so the block is passed as a plain
// dimension rather than wrapped in a one-field struct.

/// M x M matrix with ones on the superdiagonal, zeros elsewhere.
CMatrix make_shift(std::size_t m);

/// Closed-form resolvent of the shift block: upper-triangular Toeplitz with
/// entry lambda^{-1-(j-i)} at (i, j), j >= i. Built from powers of 1/lambda
/// (divide once, multiply up), never from a generic solve.
CMatrix shift_resolvent(std::size_t m, Complex lambda);

/// Closed-form exponential: upper-triangular Toeplitz with diagonals t^k/k!.
CMatrix shift_exp(std::size_t m, double t);

struct BoundsReport {
    double norm = 0.0;
    std::optional<double> lower;  // sqrt(M), present when |lambda| = 1 (within 1e-12)
    std::optional<double> upper;  // 1/(|lambda| - 1), present when |lambda| > 1
    bool violated = false;        // norm outside [lower - 1e-9, upper + 1e-9]

    std::string to_json() const;
};

/// Computed resolvent norm together with the closed-form bounds that apply
/// at this lambda, and a flag if the computation escapes them.
BoundsReport shift_bounds_report(std::size_t m, Complex lambda);

/// op_norm2(shift_resolvent(m, lambda)) with a process-wide memo keyed on
/// (m, lambda). Values are pure functions of the key, so the cache changes
/// speed only.
double resolvent_norm(std::size_t m, Complex lambda);

}  // namespace semistab::shiftblock
