#include <cstdlib>
#include <string_view>

#include "omnivr/simd/kernels.hpp"

namespace omnivr::simd {

#ifdef OMNIVR_HAVE_AVX2
const Kernels* avx2_kernels_impl();
#endif

const Kernels* avx2_kernels()
{
#ifdef OMNIVR_HAVE_AVX2
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? avx2_kernels_impl() : nullptr;
#else
    return nullptr;
#endif
}

const Kernels& active_kernels()
{
    static const Kernels* chosen = [] {
        const char* forced = std::getenv("OMNIVR_SIMD");
        if (forced != nullptr && std::string_view(forced) == "scalar")
            return &scalar_kernels();
        if (const Kernels* k = avx2_kernels())
            return k;
        return &scalar_kernels();
    }();
    return *chosen;
}

} // namespace omnivr::simd
