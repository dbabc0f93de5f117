#pragma once

// Complex double inner-loop kernels with a scalar reference implementation
// and an AVX2/FMA variant selected at runtime.
//
// All buffers are interleaved std::complex<double> (re, im). Matrices are
// row-major with an explicit leading dimension equal to their column count.

#include <complex>
#include <cstddef>
#include <string_view>

namespace liolab::kernels {

using Complex = std::complex<double>;

enum class Backend { Scalar, Avx2 };

struct KernelTable {
    Backend backend;
    std::string_view name;

    /// y[i] += alpha * x[i]
    void (*axpy)(std::size_t n, Complex alpha, const Complex* x, Complex* y);
    /// sum x[i] * y[i] (unconjugated)
    Complex (*dotu)(std::size_t n, const Complex* x, const Complex* y);
    /// sum |x[i]|^2
    double (*sqnorm)(std::size_t n, const Complex* x);
    /// y = A x, A is m x n
    void (*gemv)(std::size_t m, std::size_t n, const Complex* a, const Complex* x, Complex* y);
    /// C = A B, A is m x k, B is k x n
    void (*gemm)(std::size_t m, std::size_t k, std::size_t n, const Complex* a, const Complex* b,
                 Complex* c);
};

const KernelTable& scalar();

/// nullptr when the binary was built without AVX2 support or the CPU lacks AVX2+FMA.
const KernelTable* avx2();

/// Best available table. Chosen once; `LIOLAB_SIMD=scalar` forces the reference path.
const KernelTable& active();

}  // namespace liolab::kernels
