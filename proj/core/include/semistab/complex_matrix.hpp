#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace semistab {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Dense complex matrix, row-major. The workhorse for blocks, resolvents and
/// exponentials. Sizes here are small (a few hundred at most), so storage is
/// a flat std::vector and products are plain triple loops.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(const CVector& d);
    static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const CVector& entries() const { return a_; }

    CMatrix& operator+=(const CMatrix& rhs);
    CMatrix& operator-=(const CMatrix& rhs);
    CMatrix& operator*=(Complex s);

    CMatrix operator+(const CMatrix& rhs) const;
    CMatrix operator-(const CMatrix& rhs) const;
    CMatrix operator*(const CMatrix& rhs) const;

    CVector apply(const CVector& x) const;
    CVector apply_adjoint(const CVector& x) const;
    /// Allocation-free variants for hot loops; y must not alias x.
    void apply_into(const CVector& x, CVector& y) const;
    void apply_adjoint_into(const CVector& x, CVector& y) const;

    CMatrix transpose() const;
    CMatrix adjoint() const;

    double frobenius_norm() const;
    /// Max absolute column sum (the l1 operator norm).
    double one_norm() const;
    double max_abs() const;
    double col_norm2(std::size_t j) const;
    bool all_finite() const;

    bool is_upper_triangular() const;
    bool is_lower_triangular() const;
    /// True when every diagonal entry equals the first one exactly.
    bool has_constant_diagonal() const;

    /// Interchange format: {"rows": n, "cols": m, "entries": [[re, im], ...]}
    /// row-major. Field names are fixed.
    std::string to_json() const;
    static CMatrix from_json(const std::string& text);

private:
    std::size_t rows_ = 0, cols_ = 0;
    CVector a_;
};

CMatrix operator*(Complex s, const CMatrix& m);

double norm2(const CVector& x);
/// Conjugate-linear in the first argument.
Complex dot(const CVector& x, const CVector& y);

/// Round-trip decimal formatting ('%.17g', '.' decimal, locale-free).
std::string fmt_double(double x);

}  // namespace semistab
