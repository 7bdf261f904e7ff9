#include "knead/series_matrix.hpp"

#include <cmath>
#include <utility>

namespace knead {

SeriesMatrix::SeriesMatrix(int rows, int cols, std::vector<TruncatedSeries> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ <= 0 || cols_ <= 0)
        throw Error("series matrix dimensions must be positive");
    if (entries_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_))
        throw Error("series matrix entry count does not match its shape");
    const int n = entries_.front().truncation();
    for (const TruncatedSeries& e : entries_)
        if (e.truncation() != n)
            throw TruncationMismatch("series matrix entries must share one truncation");
}

SeriesMatrix SeriesMatrix::zero(int rows, int cols, int truncation) {
    std::vector<TruncatedSeries> entries;
    entries.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int i = 0; i < rows * cols; ++i)
        entries.push_back(TruncatedSeries::zero(truncation));
    return SeriesMatrix(rows, cols, std::move(entries));
}

SeriesMatrix SeriesMatrix::identity(int n, int truncation) {
    SeriesMatrix m = zero(n, n, truncation);
    for (int i = 0; i < n; ++i)
        m.set(i, i, TruncatedSeries::one(truncation));
    return m;
}

const TruncatedSeries& SeriesMatrix::at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

void SeriesMatrix::set(int i, int j, TruncatedSeries value) {
    if (value.truncation() != truncation())
        throw TruncationMismatch("entry truncation differs from the matrix truncation");
    entries_[static_cast<std::size_t>(i) * cols_ + j] = std::move(value);
}

TruncatedSeries determinant(SeriesMatrix m) {
    if (m.rows() != m.cols())
        throw Error("determinant of a non-square series matrix");
    const int n = m.rows();
    TruncatedSeries det = TruncatedSeries::one(m.truncation());
    for (int k = 0; k < n; ++k) {
        const TruncatedSeries& pivot = m.at(k, k);
        if (std::abs(pivot.coeff(0)) <= 1e-12 * pivot.scale())
            throw PivotNotInvertible("leading pivot has no invertible constant term");
        det = mul(det, pivot);
        if (k == n - 1)
            break;
        const TruncatedSeries pivot_inv = invert(pivot);
        for (int i = k + 1; i < n; ++i) {
            const TruncatedSeries factor = mul(m.at(i, k), pivot_inv);
            if (factor.is_zero())
                continue;
            for (int j = k; j < n; ++j)
                m.set(i, j, sub(m.at(i, j), mul(factor, m.at(k, j))));
        }
    }
    return det;
}

} // namespace knead
