#pragma once

#include "knead/recurrence.hpp"
#include "knead/series_matrix.hpp"

namespace knead {

/// A recurrence together with its kneading matrix K (the p x p matrix
/// of coefficient generating series, K(i,j) = sum_n A_n(i,j) z^n) and
/// kneading determinant delta = det(I - zK), all at one truncation.
struct KneadingSystem {
    Recurrence rec;
    int truncation;
    SeriesMatrix K;
    TruncatedSeries delta;
};

/// Builds K and delta at truncation N >= 1. Provider is evaluated at
/// indices 0..N.
KneadingSystem build_kneading(const Recurrence& rec, int truncation);

/// K extended by the beta-th column and the alpha-th Kronecker-delta
/// row, (p+1) x (p+1). With beta = q*p + r (0 <= r < p), the extra
/// column is sum_n A_{n+q-1}(i,p) z^n when r = 0 and
/// sum_n A_{n+q}(i,r) z^n otherwise; for beta <= p it duplicates column
/// beta. alpha is 1-based in 1..p, beta is 1-based.
SeriesMatrix extended_kneading_matrix(const KneadingSystem& sys, int alpha, unsigned beta);

/// det(I - z K_alpha(beta)); has constant term 1.
TruncatedSeries extended_determinant(const KneadingSystem& sys, int alpha, unsigned beta);

/// Generating function of the alpha-th component of the solution with
/// initial condition e_beta: (1 - delta^{-1} delta_alpha(beta)) / z,
/// at truncation N-1. Its z^n coefficient is v_n^{(alpha)}.
TruncatedSeries generating_function_basis(const KneadingSystem& sys, int alpha, unsigned beta);

/// Component generating functions of a solution, each at truncation N-1.
struct GeneratingFunction {
    std::vector<TruncatedSeries> components; // index alpha-1
};

/// G(u) assembled by linearity over the basis coordinates of u.
GeneratingFunction generating_function(const KneadingSystem& sys, const InitialCondition& u);

/// Both sides of det(I - zF) = det(I - zK) at truncation kp, computed
/// with the same series-LU determinant, plus their max coefficient
/// discrepancy.
struct CompanionCheck {
    TruncatedSeries lhs; // det(I - zF), F the companion matrix
    TruncatedSeries rhs; // kneading determinant
    double max_abs_diff;
};

CompanionCheck companion_check(const Recurrence& rec);

} // namespace knead
