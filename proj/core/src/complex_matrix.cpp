#include "semistab/complex_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace semistab {

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Complex{0.0, 0.0}) {}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(const CVector& d) {
    CMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    CMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged initializer rows");
        std::size_t j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
    for (auto& v : a_) v *= s;
    return *this;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
    CMatrix out = *this;
    out += rhs;
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
    CMatrix out = *this;
    out -= rhs;
    return out;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch");
    CMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += aik * rhs(k, j);
            }
        }
    }
    return out;
}

CVector CMatrix::apply(const CVector& x) const {
    CVector y;
    apply_into(x, y);
    return y;
}

CVector CMatrix::apply_adjoint(const CVector& x) const {
    CVector y;
    apply_adjoint_into(x, y);
    return y;
}

void CMatrix::apply_into(const CVector& x, CVector& y) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch");
    y.assign(rows_, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < rows_; ++i) {
        const Complex* row = a_.data() + i * cols_;
        double re = 0.0, im = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) {
            const double ar = row[j].real(), ai = row[j].imag();
            const double xr = x[j].real(), xi = x[j].imag();
            re += ar * xr - ai * xi;
            im += ar * xi + ai * xr;
        }
        y[i] = Complex{re, im};
    }
}

void CMatrix::apply_adjoint_into(const CVector& x, CVector& y) const {
    if (x.size() != rows_) throw std::invalid_argument("dimension mismatch");
    y.assign(cols_, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < rows_; ++i) {
        const Complex xi = x[i];
        const Complex* row = a_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) {
            const double ar = row[j].real(), ai = -row[j].imag();
            y[j] += Complex{ar * xi.real() - ai * xi.imag(), ar * xi.imag() + ai * xi.real()};
        }
    }
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double CMatrix::one_norm() const {
    double best = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

double CMatrix::max_abs() const {
    double best = 0.0;
    for (const auto& v : a_) best = std::max(best, std::abs(v));
    return best;
}

double CMatrix::col_norm2(std::size_t j) const {
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += std::norm((*this)(i, j));
    return std::sqrt(s);
}

bool CMatrix::all_finite() const {
    for (const auto& v : a_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

bool CMatrix::is_upper_triangular() const {
    for (std::size_t i = 1; i < rows_; ++i)
        for (std::size_t j = 0; j < std::min(i, cols_); ++j)
            if ((*this)(i, j) != Complex{0.0, 0.0}) return false;
    return true;
}

bool CMatrix::is_lower_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != Complex{0.0, 0.0}) return false;
    return true;
}

bool CMatrix::has_constant_diagonal() const {
    if (rows_ == 0) return true;
    const Complex d0 = (*this)(0, 0);
    for (std::size_t i = 1; i < std::min(rows_, cols_); ++i)
        if ((*this)(i, i) != d0) return false;
    return true;
}

std::string CMatrix::to_json() const {
    nlohmann::json j;
    j["rows"] = rows_;
    j["cols"] = cols_;
    auto entries = nlohmann::json::array();
    for (const auto& v : a_) entries.push_back({v.real(), v.imag()});
    j["entries"] = std::move(entries);
    return j.dump();
}

CMatrix CMatrix::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed matrix JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON must have fields rows, cols, entries");
    const auto rows = j.at("rows").get<std::int64_t>();
    const auto cols = j.at("cols").get<std::int64_t>();
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix JSON: negative dimension");
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows * cols))
        throw std::invalid_argument("matrix JSON: entry count does not match rows*cols");
    CMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    std::size_t k = 0;
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("matrix JSON: entries must be [re, im] pairs");
        const double re = e[0].get<double>();
        const double im = e[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw std::invalid_argument("matrix JSON: non-finite entry");
        m.a_[k++] = Complex{re, im};
    }
    return m;
}

CMatrix operator*(Complex s, const CMatrix& m) {
    CMatrix out = m;
    out *= s;
    return out;
}

double norm2(const CVector& x) {
    double s = 0.0;
    for (const auto& v : x) s += std::norm(v);
    return std::sqrt(s);
}

Complex dot(const CVector& x, const CVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace semistab
