#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace liolab {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr Complex kI{0.0, 1.0};

/// Raised on shape mismatches between operands.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical routine cannot meet its accuracy contract.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense complex matrix, row-major.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
    static CMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Complex> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::span<Complex> data() noexcept { return data_; }
    std::span<const Complex> data() const noexcept { return data_; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    CMatrix conj() const;

    CMatrix& operator+=(const CMatrix& rhs);
    CMatrix& operator-=(const CMatrix& rhs);
    CMatrix& operator*=(Complex s);

    bool all_finite() const noexcept;

    friend bool operator==(const CMatrix&, const CMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(Complex s, CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CVector operator*(const CMatrix& a, std::span<const Complex> x);

double frobenius_norm(const CMatrix& m);
double norm1(const CMatrix& m);
double norm2(std::span<const Complex> v);
Complex trace(const CMatrix& m);

/// Frobenius norm of a - b.
double distance(const CMatrix& a, const CMatrix& b);
double distance(std::span<const Complex> a, std::span<const Complex> b);

/// Throws std::invalid_argument naming `what` when m holds NaN/Inf.
void require_finite(const CMatrix& m, const std::string& what);
void require_square(const CMatrix& m, const std::string& what);

}  // namespace liolab
