// Compiled with -mavx2 -mfma; only reached through the runtime dispatcher.
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace liolab::kernels::detail {

namespace {

inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }

// Two complex products alpha * x packed as [re0 im0 re1 im1].
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d x) {
    const __m256d xs = _mm256_permute_pd(x, 0b0101);
    return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, xs));
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void axpy_avx2(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    const double* xd = as_doubles(x);
    double* yd = as_doubles(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_broadcast(ar, ai, xv)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

Complex dotu_avx2(std::size_t n, const Complex* x, const Complex* y) {
    // same[k] accumulates [xr*yr, xi*yi], cross[k] accumulates [xr*yi, xi*yr]
    __m256d same = _mm256_setzero_pd();
    __m256d cross = _mm256_setzero_pd();
    const double* xd = as_doubles(x);
    const double* yd = as_doubles(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        same = _mm256_fmadd_pd(xv, yv, same);
        cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
    }
    alignas(32) double s[4];
    alignas(32) double c[4];
    _mm256_store_pd(s, same);
    _mm256_store_pd(c, cross);
    double re = (s[0] - s[1]) + (s[2] - s[3]);
    double im = (c[0] + c[1]) + (c[2] + c[3]);
    for (; i < n; ++i) {
        re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
    }
    return {re, im};
}

double sqnorm_avx2(std::size_t n, const Complex* x) {
    __m256d acc = _mm256_setzero_pd();
    const double* xd = as_doubles(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    double total = hsum(acc);
    for (; i < n; ++i) total += std::norm(x[i]);
    return total;
}

void gemv_avx2(std::size_t m, std::size_t n, const Complex* a, const Complex* x, Complex* y) {
    for (std::size_t i = 0; i < m; ++i) y[i] = dotu_avx2(n, a + i * n, x);
}

void gemm_avx2(std::size_t m, std::size_t k, std::size_t n, const Complex* a, const Complex* b,
               Complex* c) {
    for (std::size_t i = 0; i < m; ++i) {
        Complex* ci = c + i * n;
        for (std::size_t j = 0; j < n; ++j) ci[j] = Complex{};
        for (std::size_t p = 0; p < k; ++p) {
            const Complex aip = a[i * k + p];
            if (aip == Complex{}) continue;
            axpy_avx2(n, aip, b + p * n, ci);
        }
    }
}

}  // namespace liolab::kernels::detail
