// NEON kernels for aarch64. One complex<double> per 128-bit register,
// two registers per loop step to mirror the AVX2 stride.

#ifdef KNEAD_HAVE_NEON

#include "knead/kernels.hpp"

#include <arm_neon.h>

namespace knead::kern {
namespace {

inline const double* dptr(const cplx* p) {
    return reinterpret_cast<const double*>(p);
}

inline double* dptr(cplx* p) {
    return reinterpret_cast<double*>(p);
}

// [ar, ai] * [br, bi] -> [ar*br - ai*bi, ar*bi + ai*br]
inline float64x2_t cmul(float64x2_t a, float64x2_t b) {
    const float64x2_t sign = {-1.0, 1.0};
    float64x2_t a_re = vdupq_laneq_f64(a, 0);
    float64x2_t a_im = vdupq_laneq_f64(a, 1);
    float64x2_t b_sw = vextq_f64(b, b, 1); // [bi, br]
    return vfmaq_f64(vmulq_f64(vmulq_f64(a_im, b_sw), sign), a_re, b);
}

void add_neon(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        vst1q_f64(dptr(out + i), vaddq_f64(vld1q_f64(dptr(a + i)), vld1q_f64(dptr(b + i))));
}

void sub_neon(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        vst1q_f64(dptr(out + i), vsubq_f64(vld1q_f64(dptr(a + i)), vld1q_f64(dptr(b + i))));
}

void scale_neon(cplx s, const cplx* x, cplx* out, std::size_t n) {
    const float64x2_t vs = {s.real(), s.imag()};
    for (std::size_t i = 0; i < n; ++i)
        vst1q_f64(dptr(out + i), cmul(vs, vld1q_f64(dptr(x + i))));
}

void axpy_neon(cplx s, const cplx* x, cplx* y, std::size_t n) {
    const float64x2_t vs = {s.real(), s.imag()};
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t y0 = vaddq_f64(vld1q_f64(dptr(y + i)), cmul(vs, vld1q_f64(dptr(x + i))));
        float64x2_t y1 = vaddq_f64(vld1q_f64(dptr(y + i + 1)), cmul(vs, vld1q_f64(dptr(x + i + 1))));
        vst1q_f64(dptr(y + i), y0);
        vst1q_f64(dptr(y + i + 1), y1);
    }
    for (; i < n; ++i)
        y[i] += s * x[i];
}

cplx dot_rev_neon(const cplx* x, const cplx* y, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i)
        acc = vaddq_f64(acc, cmul(vld1q_f64(dptr(x + i)), vld1q_f64(dptr(y + (n - 1 - i)))));
    return {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
}

} // namespace

namespace detail {

const Table& neon() {
    static const Table table{
            "neon", add_neon, sub_neon, scale_neon, axpy_neon, dot_rev_neon,
    };
    return table;
}

} // namespace detail
} // namespace knead::kern

#endif // KNEAD_HAVE_NEON
