#include "liolab/cmatrix.hpp"

#include <algorithm>
#include <cmath>

#include "liolab/kernels.hpp"

namespace liolab {

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw DimensionError("CMatrix: entry count " + std::to_string(data_.size()) +
                             " does not match " + std::to_string(rows) + "x" +
                             std::to_string(cols));
    }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("CMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> diag) {
    CMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

CMatrix CMatrix::conj() const {
    CMatrix out(*this);
    for (auto& z : out.data_) z = std::conj(z);
    return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("CMatrix +=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("CMatrix -=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
}

bool CMatrix::all_finite() const noexcept {
    for (const auto& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    CMatrix c(a.rows(), b.cols());
    kernels::active().gemm(a.rows(), a.cols(), b.cols(), a.data().data(), b.data().data(),
                           c.data().data());
    return c;
}

CVector operator*(const CMatrix& a, std::span<const Complex> x) {
    if (a.cols() != x.size()) throw DimensionError("matvec: dimension mismatch");
    CVector y(a.rows());
    kernels::active().gemv(a.rows(), a.cols(), a.data().data(), x.data(), y.data());
    return y;
}

double frobenius_norm(const CMatrix& m) {
    return std::sqrt(kernels::active().sqnorm(m.data().size(), m.data().data()));
}

double norm1(const CMatrix& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

double norm2(std::span<const Complex> v) {
    return std::sqrt(kernels::active().sqnorm(v.size(), v.data()));
}

Complex trace(const CMatrix& m) {
    require_square(m, "trace");
    Complex t{};
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

double distance(const CMatrix& a, const CMatrix& b) { return frobenius_norm(a - b); }

double distance(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) throw DimensionError("distance: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::norm(a[i] - b[i]);
    return std::sqrt(acc);
}

void require_finite(const CMatrix& m, const std::string& what) {
    if (!m.all_finite()) throw std::invalid_argument(what + ": non-finite entry");
}

void require_square(const CMatrix& m, const std::string& what) {
    if (!m.square()) {
        throw DimensionError(what + ": expected square matrix, got " + std::to_string(m.rows()) +
                             "x" + std::to_string(m.cols()));
    }
}

}  // namespace liolab
