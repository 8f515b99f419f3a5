#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "semistab/mode_operator.hpp"

namespace semistab::directsum {

/// D restricted to blocks B_1, ..., B_{m_max}, with tail certificates
/// standing in for the rest of the infinite direct sum. Truncation is never
/// silent: reports carry a certification flag and, when valid, a finite
/// upper bound on everything beyond m_max.
struct DirectSumOperator {
    std::size_t m_max;
};

/// sup over blocks M <= m_max of the certified block resolvent norms.
/// `norm` is the computed supremum (non-decreasing in m_max, exact whenever
/// some block attains the global sup); `tail_bound` bounds every block
/// beyond m_max; `certified` means both the per-block norms and the tail
/// bound are valid, so the true norm lies in [norm, max(norm, tail_bound)].
modeop::ResolventReport d_resolvent_norm(const DirectSumOperator& op, Complex lambda);

enum class CertStatus { certified, uncertified, skipped };
const char* to_string(CertStatus s);

struct ScanRow {
    Complex lambda;
    double norm = 0.0;
    std::size_t attained_m = 0;
    long attained_n = 0;
    CertStatus status = CertStatus::uncertified;
};

/// Rows sorted by Im(lambda); every row carries a certification flag.
struct ScanTable {
    std::size_t m_max = 0;
    std::string grid_desc;
    std::string interpretation;
    std::vector<ScanRow> rows;

    /// Header "re,im,norm,attained_M,attained_n,certified"; skipped rows
    /// carry norm "nan" and certified "skipped". Bit-stable for fixed input.
    std::string to_csv() const;
    std::string to_json() const;
};

/// Certified resolvent norms on a user grid kept away from the spectrum
/// enclosure {|z - 4| <= 1} union i*Z \ {0}. Grid points within 0.1 of the
/// enclosure are reported as skipped rows, not errors.
ScanTable spectrum_enclosure_report(const DirectSumOperator& op, std::vector<Complex> grid);

/// d_resolvent_norm at lambda = 1 + i k for k = 1..m_max. The running max
/// passes sqrt(k) at every k; the table's interpretation line states the
/// hyperbolicity consequence via the Gearhart-Pruss criterion.
ScanTable blowup_scan(const DirectSumOperator& op);

/// The growth assertion behind the scan: running max >= sqrt(k) - tol at
/// every row, all rows certified.
bool blowup_growth_holds(const ScanTable& table, double tol);

}  // namespace semistab::directsum
