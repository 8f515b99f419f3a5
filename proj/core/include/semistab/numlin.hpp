#pragma once

#include <cstddef>
#include <vector>

#include "semistab/complex_matrix.hpp"

namespace semistab::numlin {

/// Largest singular value, via power iteration on A*A with a deterministic
/// all-ones start vector. Stops when the Rayleigh quotient changes by less
/// than 1e-13 relative (cap 10000 iterations). Deterministic for fixed input.
double op_norm2(const CMatrix& a);

struct Norm2Detail {
    double norm = 0.0;
    CVector right_singular;  // unit vector v with ||A v|| ~ norm
    std::size_t iterations = 0;
};
Norm2Detail op_norm2_detail(const CMatrix& a);

/// e^{tA}. Triangular inputs with a constant diagonal (nilpotent shifts and
/// their mu*I + N relatives) take the exact finite Taylor path; everything
/// else goes through scaling-and-squaring with an order-16 Taylor kernel and
/// scaled norm <= 1/2.
CMatrix expm(const CMatrix& a, double t);

/// Solves (lambda*I - A) x = g by complex LU with partial pivoting. Rejects
/// systems whose 2-norm condition estimate exceeds 1e14.
CVector resolvent_apply(const CMatrix& a, Complex lambda, const CVector& g);

/// All eigenvalues of a square matrix of dimension <= 64, by unitary
/// Hessenberg reduction and shifted QR iteration.
std::vector<Complex> eigenvalues(const CMatrix& a);

/// s(A) = sup Re(sigma(A)) for a finite matrix: max real part over eigenvalues.
double spectral_bound(const CMatrix& a);

/// Square matrix with real, entrywise-nonnegative entries (a positive
/// operator in the finite lattice model).
class NonnegMatrix {
public:
    /// Validates: square, imaginary parts exactly zero, entries >= 0.
    /// Real entries in [-clamp_tol, 0) are rounded up to 0; anything more
    /// negative is an error.
    explicit NonnegMatrix(const CMatrix& m, double clamp_tol = 0.0);
    NonnegMatrix(std::size_t n, std::vector<double> entries);

    std::size_t dim() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    std::vector<double> apply(const std::vector<double>& x) const;
    CVector apply(const CVector& x) const;
    CMatrix as_cmatrix() const;

    /// Max absolute column sum; the operator norm on l1.
    double one_norm() const;

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

/// Operator norm of a nonnegative matrix from l_p to l_p, p in [1, inf),
/// by the Boyd/Higham power method with a deterministic all-ones start.
/// p = 1 is the exact max column sum.
double pnorm_nonneg(const NonnegMatrix& p_mat, double p);

/// Complex LU with partial pivoting. Shared by the resolvent, matrix
/// inverses, and condition estimates.
class LuFactor {
public:
    explicit LuFactor(const CMatrix& m);

    bool singular() const { return singular_; }
    std::size_t dim() const { return n_; }

    CVector solve(const CVector& b) const;
    /// Solves M^H x = b using the same factorization.
    CVector solve_adjoint(const CVector& b) const;

    /// Power-iteration estimate of ||M^{-1}||_2 (a few solves; lower bound
    /// in exact arithmetic, adequate for condition gating).
    double inverse_norm2_estimate() const;

private:
    std::size_t n_ = 0;
    CMatrix lu_;
    std::vector<std::size_t> piv_;
    bool singular_ = false;
};

CMatrix inverse(const CMatrix& m);

}  // namespace semistab::numlin
