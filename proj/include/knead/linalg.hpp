#pragma once

#include "knead/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace knead {

/// Vector in C^p.
using CVector = std::vector<cplx>;

/// Small dense complex matrix, row-major. Sized for coefficient
/// matrices (p x p) and companion matrices (kp x kp); nothing here is
/// tuned for large dimensions.
struct CMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<cplx> data;

    CMatrix() = default;
    CMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    static CMatrix identity(int n) {
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = cplx{1.0, 0.0};
        return m;
    }

    cplx& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const cplx& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    bool is_zero() const {
        for (const cplx& v : data)
            if (v != cplx{0.0, 0.0})
                return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (const cplx& v : data)
            m = std::max(m, std::abs(v));
        return m;
    }
};

inline CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const cplx aik = a(i, k);
            for (int j = 0; j < b.cols; ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

inline CVector matvec(const CMatrix& a, const CVector& x) {
    CVector out(static_cast<std::size_t>(a.rows));
    for (int i = 0; i < a.rows; ++i) {
        cplx acc{0.0, 0.0};
        for (int j = 0; j < a.cols; ++j)
            acc += a(i, j) * x[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

inline cplx trace(const CMatrix& a) {
    cplx t{0.0, 0.0};
    for (int i = 0; i < a.rows; ++i)
        t += a(i, i);
    return t;
}

} // namespace knead
