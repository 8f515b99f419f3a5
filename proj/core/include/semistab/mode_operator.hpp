#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semistab/complex_matrix.hpp"

namespace semistab::modeop {

/// B_M in its exact Fourier-mode block form: one finite block per integer
/// mode n, each block equal to mu_n * I + C_M with mu_0 = 4 and
/// mu_n = i*n*M otherwise. No grid truncation is involved; the block family
/// is the operator.
struct ModeOperator {
    std::size_t m;
};

/// mu_n: 4 at the mean mode, i*n*M elsewhere.
Complex mode_shift(std::size_t m, long n);

struct Attained {
    std::size_t block_m = 0;
    long mode_n = 0;
};

/// Certified resolvent-norm result. `certified` means the reported value is
/// the exact supremum over all modes: every unexamined mode is bounded
/// strictly below `norm` by the 1/(|z|-1) resolvent estimate. At the
/// direct-sum level the same record is reused; there `tail_bound` carries a
/// finite upper bound on all unexamined blocks and `norm` stays the computed
/// (attained) supremum, which the tail may in principle approach but never
/// exceed when `certified` is set.
struct ResolventReport {
    Complex lambda;
    double norm = 0.0;
    Attained attained;
    double pruning_radius = 0.0;
    bool certified = false;
    std::optional<double> tail_bound;

    std::string to_json() const;
};

/// max over modes of ||(lambda - mu_n - C_M)^{-1}||, pruning far modes with
/// the closed-form estimate. Starts at radius R = 2 and doubles until the
/// tail bound drops below the computed maximum or 64 modes were examined.
ResolventReport bm_resolvent_norm(const ModeOperator& op, Complex lambda);

/// ||e^{tB_M}|| = e^{4t} * ||e^{tC_M}||: the mean mode carries the e^{4t}
/// factor, every other mode only a unimodular rotation.
double bm_exp_norm(const ModeOperator& op, double t);

/// {4} followed by +-i n M for n = 1..window.
std::vector<Complex> bm_spectrum_points(const ModeOperator& op, long window);

}  // namespace semistab::modeop
