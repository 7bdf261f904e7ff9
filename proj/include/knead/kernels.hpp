#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace knead {

using cplx = std::complex<double>;

namespace kern {

/// One set of array kernels. Every entry operates on contiguous
/// std::complex<double> ranges; `out` may alias neither input unless noted.
struct Table {
    const char* name;
    // out[i] = a[i] + b[i]
    void (*add)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
    // out[i] = a[i] - b[i]
    void (*sub)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
    // out[i] = s * x[i]  (out == x allowed)
    void (*scale)(cplx s, const cplx* x, cplx* out, std::size_t n);
    // y[i] += s * x[i]
    void (*axpy)(cplx s, const cplx* x, cplx* y, std::size_t n);
    // sum over i of x[i] * y[n-1-i]  (the convolution inner product)
    cplx (*dot_rev)(const cplx* x, const cplx* y, std::size_t n);
};

/// Kernel table selected for this process. Picked once at first use:
/// best instruction set the CPU supports, overridable with the
/// KNEAD_SIMD environment variable (scalar | avx2 | neon).
const Table& active();

/// Reference implementation, always available.
const Table& scalar();

/// Every table usable on this machine, scalar first. Used by the
/// equivalence tests.
std::vector<const Table*> variants();

inline void add(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    active().add(a.data(), b.data(), out.data(), out.size());
}

inline void sub(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    active().sub(a.data(), b.data(), out.data(), out.size());
}

inline void scale(cplx s, std::span<const cplx> x, std::span<cplx> out) {
    active().scale(s, x.data(), out.data(), out.size());
}

inline void axpy(cplx s, std::span<const cplx> x, std::span<cplx> y) {
    active().axpy(s, x.data(), y.data(), y.size());
}

inline cplx dot_rev(std::span<const cplx> x, std::span<const cplx> y) {
    return active().dot_rev(x.data(), y.data(), x.size());
}

} // namespace kern
} // namespace knead
