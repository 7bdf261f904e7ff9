// AVX2/FMA kernels. Two complex<double> per 256-bit register, interleaved
// [re0, im0, re1, im1]. Compiled with -mavx2 -mfma on x86-64 only; the
// dispatcher checks CPU support before handing these out.

#ifdef KNEAD_HAVE_AVX2

#include "knead/kernels.hpp"

#include <immintrin.h>

namespace knead::kern {
namespace {

inline const double* dptr(const cplx* p) {
    return reinterpret_cast<const double*>(p);
}

inline double* dptr(cplx* p) {
    return reinterpret_cast<double*>(p);
}

// Packed complex product of the pair lanes.
inline __m256d cmul(__m256d a, __m256d b) {
    __m256d a_re = _mm256_movedup_pd(a);      // [ar0, ar0, ar1, ar1]
    __m256d a_im = _mm256_permute_pd(a, 0xF); // [ai0, ai0, ai1, ai1]
    __m256d b_sw = _mm256_permute_pd(b, 0x5); // [bi0, br0, bi1, br1]
    return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_sw));
}

void add_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(dptr(a + i));
        __m256d vb = _mm256_loadu_pd(dptr(b + i));
        _mm256_storeu_pd(dptr(out + i), _mm256_add_pd(va, vb));
    }
    for (; i < n; ++i)
        out[i] = a[i] + b[i];
}

void sub_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(dptr(a + i));
        __m256d vb = _mm256_loadu_pd(dptr(b + i));
        _mm256_storeu_pd(dptr(out + i), _mm256_sub_pd(va, vb));
    }
    for (; i < n; ++i)
        out[i] = a[i] - b[i];
}

void scale_avx2(cplx s, const cplx* x, cplx* out, std::size_t n) {
    const __m256d vs = _mm256_setr_pd(s.real(), s.imag(), s.real(), s.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(dptr(out + i), cmul(vs, _mm256_loadu_pd(dptr(x + i))));
    for (; i < n; ++i)
        out[i] = s * x[i];
}

void axpy_avx2(cplx s, const cplx* x, cplx* y, std::size_t n) {
    const __m256d vs = _mm256_setr_pd(s.real(), s.imag(), s.real(), s.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vy = _mm256_loadu_pd(dptr(y + i));
        vy = _mm256_add_pd(vy, cmul(vs, _mm256_loadu_pd(dptr(x + i))));
        _mm256_storeu_pd(dptr(y + i), vy);
    }
    for (; i < n; ++i)
        y[i] += s * x[i];
}

cplx dot_rev_avx2(const cplx* x, const cplx* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(dptr(x + i)); // [x_i, x_{i+1}]
        __m256d vy = _mm256_loadu_pd(dptr(y + (n - 2 - i)));
        vy = _mm256_permute2f128_pd(vy, vy, 0x01); // [y_{n-1-i}, y_{n-2-i}]
        acc = _mm256_add_pd(acc, cmul(vx, vy));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    cplx result{lanes[0] + lanes[2], lanes[1] + lanes[3]};
    for (; i < n; ++i)
        result += x[i] * y[n - 1 - i];
    return result;
}

} // namespace

namespace detail {

const Table& avx2() {
    static const Table table{
            "avx2", add_avx2, sub_avx2, scale_avx2, axpy_avx2, dot_rev_avx2,
    };
    return table;
}

} // namespace detail
} // namespace knead::kern

#endif // KNEAD_HAVE_AVX2
