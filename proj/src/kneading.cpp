#include "knead/kneading.hpp"

#include <cmath>
#include <utility>

namespace knead {

namespace {

// I - z*M for a matrix of series: shifts every entry up by one degree.
SeriesMatrix identity_minus_z(const SeriesMatrix& m) {
    const int n = m.rows();
    const int trunc = m.truncation();
    SeriesMatrix out = SeriesMatrix::zero(n, n, trunc);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto src = m.at(i, j).coeffs();
            std::vector<cplx> shifted(src.size());
            for (std::size_t d = 1; d < shifted.size(); ++d)
                shifted[d] = -src[d - 1];
            if (i == j)
                shifted[0] += cplx{1.0, 0.0};
            out.set(i, j, TruncatedSeries(std::move(shifted)));
        }
    return out;
}

// I - zF for a constant matrix F.
SeriesMatrix identity_minus_z(const CMatrix& f, int trunc) {
    SeriesMatrix out = SeriesMatrix::zero(f.rows, f.rows, trunc);
    for (int i = 0; i < f.rows; ++i)
        for (int j = 0; j < f.rows; ++j) {
            std::vector<cplx> c(static_cast<std::size_t>(trunc) + 1);
            if (trunc >= 1)
                c[1] = -f(i, j);
            if (i == j)
                c[0] = cplx{1.0, 0.0};
            out.set(i, j, TruncatedSeries(std::move(c)));
        }
    return out;
}

// The beta-th column of the extended kneading matrix: coefficient
// series of a tail-shifted column of the A_n. Evaluates the provider
// lazily up to index N + ceil(beta/p).
TruncatedSeries extended_column_entry(const Recurrence& rec, int trunc, int row, unsigned beta) {
    const int p = rec.p();
    const unsigned q = beta / static_cast<unsigned>(p);
    const unsigned r = beta % static_cast<unsigned>(p);
    std::vector<cplx> c(static_cast<std::size_t>(trunc) + 1);
    for (int n = 0; n <= trunc; ++n) {
        const unsigned index = r == 0 ? static_cast<unsigned>(n) + q - 1 : static_cast<unsigned>(n) + q;
        const int col = r == 0 ? p : static_cast<int>(r);
        c[static_cast<std::size_t>(n)] = rec.provider().matrix_at(index)(row, col - 1);
    }
    return TruncatedSeries(std::move(c));
}

} // namespace

KneadingSystem build_kneading(const Recurrence& rec, int truncation) {
    if (truncation < 1)
        throw Error("kneading truncation must be at least 1");
    const int p = rec.p();
    SeriesMatrix k = SeriesMatrix::zero(p, p, truncation);
    std::vector<std::vector<cplx>> entries(static_cast<std::size_t>(p) * p,
                                           std::vector<cplx>(static_cast<std::size_t>(truncation) + 1));
    for (int n = 0; n <= truncation; ++n) {
        const CMatrix a = rec.provider().matrix_at(static_cast<unsigned>(n));
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                entries[static_cast<std::size_t>(i) * p + j][static_cast<std::size_t>(n)] = a(i, j);
    }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            k.set(i, j, TruncatedSeries(std::move(entries[static_cast<std::size_t>(i) * p + j])));
    TruncatedSeries delta = determinant(identity_minus_z(k));
    return KneadingSystem{rec, truncation, std::move(k), std::move(delta)};
}

SeriesMatrix extended_kneading_matrix(const KneadingSystem& sys, int alpha, unsigned beta) {
    const int p = sys.rec.p();
    if (alpha < 1 || alpha > p)
        throw Error("alpha must lie in 1..p");
    if (beta == 0)
        throw Error("beta is 1-based");
    const int trunc = sys.truncation;
    SeriesMatrix out = SeriesMatrix::zero(p + 1, p + 1, trunc);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            out.set(i, j, sys.K.at(i, j));
    for (int i = 0; i < p; ++i)
        out.set(i, p, extended_column_entry(sys.rec, trunc, i, beta));
    for (int j = 1; j <= p; ++j)
        if (static_cast<unsigned>(j) == static_cast<unsigned>(alpha))
            out.set(p, j - 1, TruncatedSeries::one(trunc));
    if (beta == static_cast<unsigned>(alpha))
        out.set(p, p, TruncatedSeries::one(trunc));
    return out;
}

TruncatedSeries extended_determinant(const KneadingSystem& sys, int alpha, unsigned beta) {
    return determinant(identity_minus_z(extended_kneading_matrix(sys, alpha, beta)));
}

TruncatedSeries generating_function_basis(const KneadingSystem& sys, int alpha, unsigned beta) {
    const TruncatedSeries delta_ab = extended_determinant(sys, alpha, beta);
    const TruncatedSeries one = TruncatedSeries::one(sys.truncation);
    return shift_div_z(sub(one, mul(invert(sys.delta), delta_ab)));
}

GeneratingFunction generating_function(const KneadingSystem& sys, const InitialCondition& u) {
    const int p = sys.rec.p();
    GeneratingFunction g;
    g.components.reserve(static_cast<std::size_t>(p));
    const std::map<unsigned, cplx> coords = basis_coordinates(u, p);
    for (int alpha = 1; alpha <= p; ++alpha) {
        TruncatedSeries acc = TruncatedSeries::zero(sys.truncation - 1);
        for (const auto& [beta, c] : coords)
            acc = add(acc, mul_scalar(c, generating_function_basis(sys, alpha, beta)));
        g.components.push_back(std::move(acc));
    }
    return g;
}

CompanionCheck companion_check(const Recurrence& rec) {
    const std::optional<int> order = rec.finite_order();
    if (!order)
        throw InfiniteOrder("companion check requires a finite-order recurrence");
    const int kp = *order * rec.p();
    if (kp == 0) {
        // zero recurrence: both determinants are identically 1
        CompanionCheck out{TruncatedSeries::one(0), TruncatedSeries::one(0), 0.0};
        return out;
    }
    const CMatrix f = companion_matrix(rec);
    TruncatedSeries lhs = determinant(identity_minus_z(f, kp));
    TruncatedSeries rhs = build_kneading(rec, kp).delta;
    double diff = 0.0;
    for (int n = 0; n <= kp; ++n)
        diff = std::max(diff, std::abs(lhs.coeff(n) - rhs.coeff(n)));
    return CompanionCheck{std::move(lhs), std::move(rhs), diff};
}

} // namespace knead
