#pragma once

#include "knead/series.hpp"

#include <vector>

namespace knead {

/// Dense matrix over the truncated-series ring. All entries share one
/// truncation.
class SeriesMatrix {
public:
    SeriesMatrix(int rows, int cols, std::vector<TruncatedSeries> entries);

    /// rows x cols of zero series.
    static SeriesMatrix zero(int rows, int cols, int truncation);
    static SeriesMatrix identity(int n, int truncation);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int truncation() const { return entries_.front().truncation(); }

    const TruncatedSeries& at(int i, int j) const;
    void set(int i, int j, TruncatedSeries value);

private:
    int rows_;
    int cols_;
    std::vector<TruncatedSeries> entries_; // row-major
};

/// Determinant in the truncated ring via LU elimination without
/// pivoting. Every leading pivot must have an invertible constant term;
/// matrices of the shape I - z*M satisfy this automatically. Throws
/// PivotNotInvertible otherwise (the caller has to permute first).
TruncatedSeries determinant(SeriesMatrix m);

} // namespace knead
