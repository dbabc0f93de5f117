#pragma once

#include "liolab/kernels.hpp"

namespace liolab::kernels::detail {

void axpy_scalar(std::size_t n, Complex alpha, const Complex* x, Complex* y);
Complex dotu_scalar(std::size_t n, const Complex* x, const Complex* y);
double sqnorm_scalar(std::size_t n, const Complex* x);
void gemv_scalar(std::size_t m, std::size_t n, const Complex* a, const Complex* x, Complex* y);
void gemm_scalar(std::size_t m, std::size_t k, std::size_t n, const Complex* a, const Complex* b,
                 Complex* c);

#if defined(LIOLAB_HAVE_AVX2)
void axpy_avx2(std::size_t n, Complex alpha, const Complex* x, Complex* y);
Complex dotu_avx2(std::size_t n, const Complex* x, const Complex* y);
double sqnorm_avx2(std::size_t n, const Complex* x);
void gemv_avx2(std::size_t m, std::size_t n, const Complex* a, const Complex* x, Complex* y);
void gemm_avx2(std::size_t m, std::size_t k, std::size_t n, const Complex* a, const Complex* b,
               Complex* c);
#endif

}  // namespace liolab::kernels::detail
