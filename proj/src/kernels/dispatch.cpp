#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace liolab::kernels {

namespace {

constexpr KernelTable kScalar{Backend::Scalar,       "scalar",
                              detail::axpy_scalar,   detail::dotu_scalar,
                              detail::sqnorm_scalar, detail::gemv_scalar,
                              detail::gemm_scalar};

#if defined(LIOLAB_HAVE_AVX2)
constexpr KernelTable kAvx2{Backend::Avx2,       "avx2",           detail::axpy_avx2,
                            detail::dotu_avx2,   detail::sqnorm_avx2, detail::gemv_avx2,
                            detail::gemm_avx2};

bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}
#endif

const KernelTable& select() {
    if (const char* env = std::getenv("LIOLAB_SIMD"); env && std::string_view(env) == "scalar") {
        return kScalar;
    }
    if (const KernelTable* t = avx2()) return *t;
    return kScalar;
}

}  // namespace

const KernelTable& scalar() { return kScalar; }

const KernelTable* avx2() {
#if defined(LIOLAB_HAVE_AVX2)
    static const bool supported = cpu_has_avx2();
    return supported ? &kAvx2 : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() {
    static const KernelTable& table = select();
    return table;
}

}  // namespace liolab::kernels
