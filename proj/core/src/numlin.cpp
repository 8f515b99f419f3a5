#include "semistab/numlin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "semistab/rng.hpp"

namespace semistab::numlin {

namespace {

constexpr double kEps = 2.220446049250313e-16;

struct PowerState {
    double sigma_sq = 0.0;
    CVector v;
    std::size_t iterations = 0;
};

// Power iteration on A*A. Rayleigh quotient rho = ||A v||^2 converges to the
// top squared singular value from below; stop on 1e-13 relative change.
PowerState power_iterate(const CMatrix& a, CVector v) {
    double nv = norm2(v);
    for (auto& x : v) x /= nv;
    PowerState st;
    double rho_prev = -1.0;
    const std::size_t cap = 10000;
    std::size_t k = 0;
    CVector w, u;
    while (k < cap) {
        a.apply_into(v, w);
        double rho = 0.0;
        for (const auto& x : w) rho += std::norm(x);
        st.sigma_sq = rho;
        st.iterations = ++k;
        if (rho == 0.0) break;
        a.apply_adjoint_into(w, u);
        const double nu = norm2(u);
        if (nu == 0.0) break;
        for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] / nu;
        if (rho_prev >= 0.0 && std::abs(rho - rho_prev) <= 1e-13 * rho) break;
        rho_prev = rho;
    }
    st.v = std::move(v);
    return st;
}

}  // namespace

Norm2Detail op_norm2_detail(const CMatrix& a) {
    if (a.empty()) throw std::invalid_argument("empty matrix");
    if (!a.all_finite()) throw std::invalid_argument("matrix must be finite");
    Norm2Detail out;
    const double scale = a.max_abs();
    if (scale == 0.0) {
        out.right_singular = CVector(a.cols(), Complex{0.0, 0.0});
        out.right_singular[0] = 1.0;
        return out;
    }
    // keep the squared sums inside the double range
    if (scale > 1e100 || scale < 1e-100) {
        CMatrix b = a;
        b *= Complex{1.0 / scale, 0.0};
        out = op_norm2_detail(b);
        out.norm *= scale;
        return out;
    }
    const double fro = a.frobenius_norm();
    const std::size_t n = a.cols();
    // sigma_1 >= ||A||_F / sqrt(min(m, n)); falling clearly below that means
    // the start vector was (numerically) trapped in a lower singular space.
    const double sanity = fro / std::sqrt(static_cast<double>(std::min(a.rows(), a.cols())));
    double best = -1.0;
    for (int attempt = 0; attempt < 3; ++attempt) {
        CVector v(n);
        if (attempt == 0) {
            std::fill(v.begin(), v.end(), Complex{1.0, 0.0});
        } else if (attempt == 1) {
            for (std::size_t j = 0; j < n; ++j) v[j] = Complex{1.0 + static_cast<double>(j), 0.0};
        } else {
            Rng r(0x5eedu);
            for (auto& x : v) x = Complex{r.gaussian(), r.gaussian()};
        }
        PowerState st = power_iterate(a, std::move(v));
        const double sigma = std::sqrt(st.sigma_sq);
        if (sigma > best) {
            best = sigma;
            out.right_singular = std::move(st.v);
            out.iterations = st.iterations;
        }
        if (best >= sanity * (1.0 - 1e-10)) break;
    }
    out.norm = best;
    return out;
}

double op_norm2(const CMatrix& a) { return op_norm2_detail(a).norm; }

CMatrix expm(const CMatrix& a, double t) {
    if (!a.is_square()) throw std::invalid_argument("expm requires a square matrix");
    if (!a.all_finite() || !std::isfinite(t)) throw std::invalid_argument("expm requires finite input");
    const std::size_t n = a.rows();
    if (n == 0) return CMatrix(0, 0);
    CMatrix b = a;
    b *= Complex{t, 0.0};

    if ((b.is_upper_triangular() || b.is_lower_triangular()) && b.has_constant_diagonal()) {
        // mu*I + N with N nilpotent: e^{mu} * (finite Taylor sum), exact.
        const Complex mu = b(0, 0);
        CMatrix nil = b;
        for (std::size_t i = 0; i < n; ++i) nil(i, i) -= mu;
        CMatrix sum = CMatrix::identity(n);
        CMatrix term = CMatrix::identity(n);
        for (std::size_t k = 1; k < n; ++k) {
            term = term * nil;
            term *= Complex{1.0 / static_cast<double>(k), 0.0};
            if (term.max_abs() == 0.0) break;
            sum += term;
        }
        sum *= std::exp(mu);
        return sum;
    }

    // Scaling and squaring: bring the norm under 1/2, order-16 Taylor, square back.
    double eta = b.one_norm();
    int s = 0;
    while (eta > 0.5) {
        eta *= 0.5;
        ++s;
    }
    CMatrix x = b;
    x *= Complex{std::ldexp(1.0, -s), 0.0};
    CMatrix e = CMatrix::identity(n);
    for (int k = 16; k >= 1; --k) {
        CMatrix xe = x * e;
        xe *= Complex{1.0 / static_cast<double>(k), 0.0};
        e = CMatrix::identity(n);
        e += xe;
    }
    for (int i = 0; i < s; ++i) e = e * e;
    return e;
}

LuFactor::LuFactor(const CMatrix& m) : n_(m.rows()), lu_(m), piv_(m.rows(), 0) {
    if (!m.is_square()) throw std::invalid_argument("LU requires a square matrix");
    for (std::size_t k = 0; k < n_; ++k) {
        std::size_t p = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n_; ++i) {
            const double v = std::abs(lu_(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        piv_[k] = p;
        if (best == 0.0) {
            singular_ = true;
            return;
        }
        if (p != k) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(lu_(k, j), lu_(p, j));
        }
        const Complex pivot = lu_(k, k);
        for (std::size_t i = k + 1; i < n_; ++i) {
            lu_(i, k) /= pivot;
            const Complex lik = lu_(i, k);
            if (lik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = k + 1; j < n_; ++j) lu_(i, j) -= lik * lu_(k, j);
        }
    }
}

CVector LuFactor::solve(const CVector& b) const {
    if (singular_) throw std::runtime_error("singular system");
    if (b.size() != n_) throw std::invalid_argument("dimension mismatch");
    CVector x = b;
    for (std::size_t k = 0; k < n_; ++k) {
        if (piv_[k] != k) std::swap(x[k], x[piv_[k]]);
    }
    for (std::size_t i = 1; i < n_; ++i) {
        Complex acc = x[i];
        for (std::size_t j = 0; j < i; ++j) acc -= lu_(i, j) * x[j];
        x[i] = acc;
    }
    for (std::size_t ii = n_; ii > 0; --ii) {
        const std::size_t i = ii - 1;
        Complex acc = x[i];
        for (std::size_t j = i + 1; j < n_; ++j) acc -= lu_(i, j) * x[j];
        x[i] = acc / lu_(i, i);
    }
    return x;
}

CVector LuFactor::solve_adjoint(const CVector& b) const {
    if (singular_) throw std::runtime_error("singular system");
    if (b.size() != n_) throw std::invalid_argument("dimension mismatch");
    // M = P^T L U, so M^H = U^H L^H P: forward with U^H, back with L^H,
    // then undo the row swaps in reverse.
    CVector x = b;
    for (std::size_t i = 0; i < n_; ++i) {
        Complex acc = x[i];
        for (std::size_t j = 0; j < i; ++j) acc -= std::conj(lu_(j, i)) * x[j];
        x[i] = acc / std::conj(lu_(i, i));
    }
    for (std::size_t ii = n_; ii > 0; --ii) {
        const std::size_t i = ii - 1;
        Complex acc = x[i];
        for (std::size_t j = i + 1; j < n_; ++j) acc -= std::conj(lu_(j, i)) * x[j];
        x[i] = acc;
    }
    for (std::size_t kk = n_; kk > 0; --kk) {
        const std::size_t k = kk - 1;
        if (piv_[k] != k) std::swap(x[k], x[piv_[k]]);
    }
    return x;
}

double LuFactor::inverse_norm2_estimate() const {
    if (singular_) return std::numeric_limits<double>::infinity();
    if (n_ == 0) return 0.0;
    CVector v(n_, Complex{1.0, 0.0});
    double nv = norm2(v);
    for (auto& x : v) x /= nv;
    double rho = 0.0;
    double rho_prev = -1.0;
    for (int it = 0; it < 40; ++it) {
        CVector w = solve(v);
        rho = 0.0;
        for (const auto& x : w) rho += std::norm(x);
        if (!std::isfinite(rho)) return std::numeric_limits<double>::infinity();
        if (rho == 0.0) return 0.0;
        CVector u = solve_adjoint(w);
        const double nu = norm2(u);
        if (nu == 0.0 || !std::isfinite(nu)) break;
        for (auto& x : u) x /= nu;
        v = std::move(u);
        if (rho_prev >= 0.0 && std::abs(rho - rho_prev) <= 1e-6 * rho) break;
        rho_prev = rho;
    }
    return std::sqrt(rho);
}

CVector resolvent_apply(const CMatrix& a, Complex lambda, const CVector& g) {
    if (!a.is_square()) throw std::invalid_argument("resolvent_apply requires a square matrix");
    if (a.rows() == 0) throw std::invalid_argument("empty matrix");
    if (g.size() != a.rows()) throw std::invalid_argument("dimension mismatch");
    CMatrix m = CMatrix::identity(a.rows());
    m *= lambda;
    m -= a;
    LuFactor lu(m);
    if (lu.singular()) throw std::runtime_error("lambda in or near spectrum");
    const double cond = op_norm2(m) * lu.inverse_norm2_estimate();
    if (!(cond <= 1e14)) throw std::runtime_error("lambda in or near spectrum");
    return lu.solve(g);
}

namespace {

void hessenberg_reduce(CMatrix& h) {
    const std::size_t n = h.rows();
    if (n < 3) return;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double colnorm_sq = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) colnorm_sq += std::norm(h(i, k));
        const double colnorm = std::sqrt(colnorm_sq);
        if (colnorm == 0.0) continue;
        const Complex x0 = h(k + 1, k);
        const Complex phase = (x0 == Complex{0.0, 0.0}) ? Complex{1.0, 0.0} : x0 / std::abs(x0);
        const Complex alpha = -phase * colnorm;
        CVector v(n - k - 1);
        v[0] = x0 - alpha;
        for (std::size_t i = 1; i < v.size(); ++i) v[i] = h(k + 1 + i, k);
        double vsq = 0.0;
        for (const auto& x : v) vsq += std::norm(x);
        if (vsq == 0.0) continue;
        const double beta = 2.0 / vsq;
        // left: rows k+1.., all columns
        for (std::size_t j = k; j < n; ++j) {
            Complex s{0.0, 0.0};
            for (std::size_t i = 0; i < v.size(); ++i) s += std::conj(v[i]) * h(k + 1 + i, j);
            s *= beta;
            for (std::size_t i = 0; i < v.size(); ++i) h(k + 1 + i, j) -= v[i] * s;
        }
        // right: columns k+1.., all rows
        for (std::size_t i = 0; i < n; ++i) {
            Complex s{0.0, 0.0};
            for (std::size_t j = 0; j < v.size(); ++j) s += h(i, k + 1 + j) * v[j];
            s *= beta;
            for (std::size_t j = 0; j < v.size(); ++j) h(i, k + 1 + j) -= s * std::conj(v[j]);
        }
        h(k + 1, k) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = Complex{0.0, 0.0};
    }
}

void givens(Complex a, Complex b, double& c, Complex& s, Complex& r) {
    if (b == Complex{0.0, 0.0}) {
        c = 1.0;
        s = Complex{0.0, 0.0};
        r = a;
        return;
    }
    if (a == Complex{0.0, 0.0}) {
        c = 0.0;
        s = std::conj(b) / std::abs(b);
        r = std::abs(b);
        return;
    }
    const double na = std::abs(a);
    const double t = std::sqrt(std::norm(a) + std::norm(b));
    c = na / t;
    s = (a / na) * (std::conj(b) / t);
    r = (a / na) * t;
}

void qr_step(CMatrix& h, long lo, long hi, Complex shift) {
    for (long i = lo; i <= hi; ++i) h(i, i) -= shift;
    const long m = hi - lo;
    std::vector<double> cs(m);
    std::vector<Complex> sn(m);
    for (long i = lo; i < hi; ++i) {
        double c;
        Complex s, r;
        givens(h(i, i), h(i + 1, i), c, s, r);
        cs[i - lo] = c;
        sn[i - lo] = s;
        h(i, i) = r;
        h(i + 1, i) = Complex{0.0, 0.0};
        for (long j = i + 1; j <= hi; ++j) {
            const Complex x = h(i, j);
            const Complex y = h(i + 1, j);
            h(i, j) = c * x + s * y;
            h(i + 1, j) = -std::conj(s) * x + c * y;
        }
    }
    for (long i = lo; i < hi; ++i) {
        const double c = cs[i - lo];
        const Complex s = sn[i - lo];
        for (long r2 = lo; r2 <= i + 1; ++r2) {
            const Complex x = h(r2, i);
            const Complex y = h(r2, i + 1);
            h(r2, i) = c * x + std::conj(s) * y;
            h(r2, i + 1) = -s * x + c * y;
        }
    }
    for (long i = lo; i <= hi; ++i) h(i, i) += shift;
}

std::string iterate_dump(const CMatrix& h, long lo, long hi) {
    std::ostringstream os;
    os << "active block [" << lo << ", " << hi << "], diag:";
    for (long i = lo; i <= hi; ++i)
        os << " (" << fmt_double(h(i, i).real()) << "," << fmt_double(h(i, i).imag()) << ")";
    os << ", subdiag:";
    for (long i = lo + 1; i <= hi; ++i) os << " " << fmt_double(std::abs(h(i, i - 1)));
    return os.str();
}

}  // namespace

std::vector<Complex> eigenvalues(const CMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("eigenvalues requires a square matrix");
    if (a.rows() > 64) throw std::invalid_argument("eigenvalues limited to dimension <= 64");
    if (!a.all_finite()) throw std::invalid_argument("matrix must be finite");
    const std::size_t n = a.rows();
    if (n == 0) return {};
    CMatrix h = a;
    hessenberg_reduce(h);
    double hnorm = h.one_norm();
    if (hnorm == 0.0) hnorm = 1.0;

    std::vector<Complex> eig(n);
    long hi = static_cast<long>(n) - 1;
    int iter = 0;
    const int iter_cap = 40;  // per eigenvalue
    while (hi >= 0) {
        long lo = hi;
        while (lo > 0) {
            const double sub = std::abs(h(lo, lo - 1));
            const double diag = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
            const double thresh = kEps * (diag != 0.0 ? diag : hnorm);
            if (sub <= thresh) {
                h(lo, lo - 1) = Complex{0.0, 0.0};
                break;
            }
            --lo;
        }
        if (lo == hi) {
            eig[hi] = h(hi, hi);
            --hi;
            iter = 0;
            continue;
        }
        if (++iter > iter_cap) {
            throw std::runtime_error(
                "QR iteration failed to converge after 40 steps per eigenvalue; " +
                iterate_dump(h, lo, hi));
        }
        Complex shift;
        if (iter % 10 == 0) {
            // exceptional shift, EISPACK style
            double ts = std::abs(h(hi, hi - 1));
            if (hi >= 2) ts += std::abs(h(hi - 1, hi - 2));
            shift = Complex{ts, 0.0};
        } else {
            const Complex aa = h(hi - 1, hi - 1);
            const Complex bb = h(hi - 1, hi);
            const Complex cc = h(hi, hi - 1);
            const Complex dd = h(hi, hi);
            const Complex p = (aa - dd) * 0.5;
            Complex q = std::sqrt(p * p + bb * cc);
            if ((std::conj(p) * q).real() < 0.0) q = -q;
            const Complex den = p + q;
            shift = (den == Complex{0.0, 0.0}) ? dd : dd - (bb * cc) / den;
        }
        qr_step(h, lo, hi, shift);
    }
    return eig;
}

double spectral_bound(const CMatrix& a) {
    const auto eig = eigenvalues(a);
    if (eig.empty()) throw std::invalid_argument("empty matrix");
    double s = -std::numeric_limits<double>::infinity();
    for (const auto& z : eig) s = std::max(s, z.real());
    return s;
}

NonnegMatrix::NonnegMatrix(const CMatrix& m, double clamp_tol) {
    if (!m.is_square()) throw std::invalid_argument("NonnegMatrix must be square");
    n_ = m.rows();
    a_.resize(n_ * n_);
    std::size_t k = 0;
    for (const auto& v : m.entries()) {
        if (v.imag() != 0.0) throw std::invalid_argument("NonnegMatrix entries must be real");
        const double x = v.real();
        if (!(x >= -clamp_tol)) throw std::invalid_argument("negative entry");
        a_[k++] = x < 0.0 ? 0.0 : x;
    }
}

NonnegMatrix::NonnegMatrix(std::size_t n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n_ * n_) throw std::invalid_argument("dimension mismatch");
    for (const double x : a_) {
        if (!(x >= 0.0)) throw std::invalid_argument("negative entry");
    }
}

std::vector<double> NonnegMatrix::apply(const std::vector<double>& x) const {
    if (x.size() != n_) throw std::invalid_argument("dimension mismatch");
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n_; ++j) acc += a_[i * n_ + j] * x[j];
        y[i] = acc;
    }
    return y;
}

CVector NonnegMatrix::apply(const CVector& x) const {
    if (x.size() != n_) throw std::invalid_argument("dimension mismatch");
    CVector y(n_, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < n_; ++i) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < n_; ++j) acc += a_[i * n_ + j] * x[j];
        y[i] = acc;
    }
    return y;
}

CMatrix NonnegMatrix::as_cmatrix() const {
    CMatrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = a_[i * n_ + j];
    return m;
}

double NonnegMatrix::one_norm() const {
    double best = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i) s += a_[i * n_ + j];
        best = std::max(best, s);
    }
    return best;
}

namespace {

double vec_pnorm(const std::vector<double>& v, double p) {
    double m = 0.0;
    for (const double x : v) m = std::max(m, std::abs(x));
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (const double x : v) s += std::pow(std::abs(x) / m, p);
    return m * std::pow(s, 1.0 / p);
}

}  // namespace

double pnorm_nonneg(const NonnegMatrix& p_mat, double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must lie in [1, inf)");
    const std::size_t n = p_mat.dim();
    if (n == 0) throw std::invalid_argument("empty matrix");
    if (p == 1.0) {
        double best = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += p_mat(i, j);
            best = std::max(best, s);
        }
        return best;
    }
    const double q = p / (p - 1.0);
    std::vector<double> x(n, std::pow(static_cast<double>(n), -1.0 / p));
    double gamma_best = 0.0;
    double gamma_prev = -1.0;
    for (std::size_t it = 0; it < 10000; ++it) {
        const std::vector<double> y = p_mat.apply(x);
        const double gamma = vec_pnorm(y, p);
        if (gamma == 0.0) return 0.0;  // x > 0 entrywise, so P = 0
        gamma_best = std::max(gamma_best, gamma);
        std::vector<double> dp(n);
        for (std::size_t i = 0; i < n; ++i) dp[i] = std::pow(y[i] / gamma, p - 1.0);
        std::vector<double> z(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (dp[i] == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) z[j] += p_mat(i, j) * dp[i];
        }
        const double zq = vec_pnorm(z, q);
        double zx = 0.0;
        for (std::size_t j = 0; j < n; ++j) zx += z[j] * x[j];
        // Higham's duality test: ||z||_q <= <z, x> certifies a maximizer.
        if (it > 0 && zq <= zx * (1.0 + 1e-12)) break;
        if (gamma_prev >= 0.0 && std::abs(gamma - gamma_prev) <= 1e-13 * gamma) break;
        gamma_prev = gamma;
        if (zq == 0.0) break;
        for (std::size_t j = 0; j < n; ++j) x[j] = std::pow(z[j] / zq, q - 1.0);
        const double xp = vec_pnorm(x, p);
        for (std::size_t j = 0; j < n; ++j) x[j] /= xp;
    }
    return gamma_best;
}

CMatrix inverse(const CMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse requires a square matrix");
    LuFactor lu(m);
    if (lu.singular()) throw std::runtime_error("matrix is singular");
    const std::size_t n = m.rows();
    CMatrix out(n, n);
    CVector e(n, Complex{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        const CVector x = lu.solve(e);
        for (std::size_t i = 0; i < n; ++i) out(i, j) = x[i];
        e[j] = 0.0;
    }
    return out;
}

}  // namespace semistab::numlin
