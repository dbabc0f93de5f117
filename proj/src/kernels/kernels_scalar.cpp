#include "kernels_impl.hpp"

namespace liolab::kernels::detail {

void axpy_scalar(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

Complex dotu_scalar(std::size_t n, const Complex* x, const Complex* y) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
    }
    return {re, im};
}

double sqnorm_scalar(std::size_t n, const Complex* x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::norm(x[i]);
    return acc;
}

void gemv_scalar(std::size_t m, std::size_t n, const Complex* a, const Complex* x, Complex* y) {
    for (std::size_t i = 0; i < m; ++i) y[i] = dotu_scalar(n, a + i * n, x);
}

void gemm_scalar(std::size_t m, std::size_t k, std::size_t n, const Complex* a, const Complex* b,
                 Complex* c) {
    for (std::size_t i = 0; i < m; ++i) {
        Complex* ci = c + i * n;
        for (std::size_t j = 0; j < n; ++j) ci[j] = Complex{};
        for (std::size_t p = 0; p < k; ++p) {
            const Complex aip = a[i * k + p];
            if (aip == Complex{}) continue;
            axpy_scalar(n, aip, b + p * n, ci);
        }
    }
}

}  // namespace liolab::kernels::detail
