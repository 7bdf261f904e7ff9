#include "knead/kernels.hpp"

namespace knead::kern {
namespace {

void add_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a[i] + b[i];
}

void sub_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a[i] - b[i];
}

void scale_scalar(cplx s, const cplx* x, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = s * x[i];
}

void axpy_scalar(cplx s, const cplx* x, cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] += s * x[i];
}

cplx dot_rev_scalar(const cplx* x, const cplx* y, std::size_t n) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i] * y[n - 1 - i];
    return acc;
}

} // namespace

const Table& scalar() {
    static const Table table{
            "scalar", add_scalar, sub_scalar, scale_scalar, axpy_scalar, dot_rev_scalar,
    };
    return table;
}

} // namespace knead::kern
