#include "knead/kernels.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace knead::kern {

namespace detail {
#ifdef KNEAD_HAVE_AVX2
const Table& avx2();
#endif
#ifdef KNEAD_HAVE_NEON
const Table& neon();
#endif
} // namespace detail

namespace {

#ifdef KNEAD_HAVE_AVX2
bool cpu_has_avx2() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const Table* pick() {
    if (const char* env = std::getenv("KNEAD_SIMD")) {
        if (std::strcmp(env, "scalar") == 0)
            return &scalar();
#ifdef KNEAD_HAVE_AVX2
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2())
            return &detail::avx2();
#endif
#ifdef KNEAD_HAVE_NEON
        if (std::strcmp(env, "neon") == 0)
            return &detail::neon();
#endif
        std::fprintf(stderr, "knead: KNEAD_SIMD=%s not usable here, falling back to scalar\n", env);
        return &scalar();
    }
#ifdef KNEAD_HAVE_AVX2
    if (cpu_has_avx2())
        return &detail::avx2();
#endif
#ifdef KNEAD_HAVE_NEON
    return &detail::neon();
#endif
    return &scalar();
}

} // namespace

const Table& active() {
    static const Table* selected = pick();
    return *selected;
}

std::vector<const Table*> variants() {
    std::vector<const Table*> all{&scalar()};
#ifdef KNEAD_HAVE_AVX2
    if (cpu_has_avx2())
        all.push_back(&detail::avx2());
#endif
#ifdef KNEAD_HAVE_NEON
    all.push_back(&detail::neon());
#endif
    return all;
}

} // namespace knead::kern
