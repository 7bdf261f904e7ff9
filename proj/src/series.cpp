#include "knead/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace knead {

namespace {

constexpr double kInvertEps = 1e-12; // relative floor for invertible constant terms
constexpr double kShiftEps = 1e-8;   // relative ceiling for "vanishing" constant terms

void require_same_truncation(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.truncation() != b.truncation())
        throw TruncationMismatch("series truncations differ: " + std::to_string(a.truncation()) +
                                 " vs " + std::to_string(b.truncation()));
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw Error("a truncated series needs at least its constant term");
}

TruncatedSeries TruncatedSeries::zero(int truncation) {
    return TruncatedSeries(std::vector<cplx>(static_cast<std::size_t>(truncation) + 1));
}

TruncatedSeries TruncatedSeries::one(int truncation) {
    return constant(cplx{1.0, 0.0}, truncation);
}

TruncatedSeries TruncatedSeries::constant(cplx value, int truncation) {
    std::vector<cplx> c(static_cast<std::size_t>(truncation) + 1);
    c[0] = value;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<cplx> coeffs, int truncation) {
    coeffs.resize(static_cast<std::size_t>(truncation) + 1);
    return TruncatedSeries(std::move(coeffs));
}

double TruncatedSeries::scale() const {
    double m = 0.0;
    for (const cplx& c : coeffs_)
        m = std::max(m, std::abs(c));
    return m;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_truncation(a, b);
    std::vector<cplx> out(a.coeffs().size());
    kern::add(a.coeffs(), b.coeffs(), out);
    return TruncatedSeries(std::move(out));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_truncation(a, b);
    std::vector<cplx> out(a.coeffs().size());
    kern::sub(a.coeffs(), b.coeffs(), out);
    return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_truncation(a, b);
    const std::size_t len = a.coeffs().size();
    std::vector<cplx> out(len);
    // out[k..] += a[k] * b[0..len-1-k], one axpy per coefficient of a
    for (std::size_t k = 0; k < len; ++k)
        kern::axpy(a.coeffs()[k], b.coeffs().first(len - k),
                   std::span<cplx>(out.data() + k, len - k));
    return TruncatedSeries(std::move(out));
}

TruncatedSeries mul_scalar(cplx s, const TruncatedSeries& a) {
    std::vector<cplx> out(a.coeffs().size());
    kern::scale(s, a.coeffs(), out);
    return TruncatedSeries(std::move(out));
}

TruncatedSeries invert(const TruncatedSeries& a) {
    const auto c = a.coeffs();
    if (std::abs(c[0]) <= kInvertEps * a.scale())
        throw NonInvertibleConstantTerm("constant term too small to invert");
    std::vector<cplx> b(c.size());
    b[0] = cplx{1.0, 0.0} / c[0];
    // b_n = -b_0 * sum_{k=1..n} c_k b_{n-k}
    for (std::size_t n = 1; n < c.size(); ++n)
        b[n] = -b[0] * kern::active().dot_rev(c.data() + 1, b.data(), n);
    return TruncatedSeries(std::move(b));
}

TruncatedSeries shift_div_z(const TruncatedSeries& a, double* dropped) {
    const auto c = a.coeffs();
    const double residual = std::abs(c[0]);
    if (dropped)
        *dropped = residual;
    if (residual > kShiftEps * a.scale())
        throw NonzeroConstantTerm("constant term does not vanish; cannot divide by z");
    if (a.truncation() == 0)
        return TruncatedSeries::zero(0);
    return TruncatedSeries(std::vector<cplx>(c.begin() + 1, c.end()));
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
    const auto c = a.coeffs();
    if (std::abs(c[0]) > kShiftEps * a.scale())
        throw BadConstantTerm("exp_series requires a vanishing constant term");
    const std::size_t len = c.size();
    std::vector<cplx> b(len), weighted(len);
    for (std::size_t k = 0; k < len; ++k)
        weighted[k] = static_cast<double>(k) * c[k];
    b[0] = cplx{1.0, 0.0};
    // n b_n = sum_{k=1..n} (k a_k) b_{n-k}
    for (std::size_t n = 1; n < len; ++n)
        b[n] = kern::active().dot_rev(weighted.data() + 1, b.data(), n) / static_cast<double>(n);
    return TruncatedSeries(std::move(b));
}

TruncatedSeries log_series(const TruncatedSeries& a) {
    const auto c = a.coeffs();
    if (std::abs(c[0] - cplx{1.0, 0.0}) > kInvertEps * a.scale())
        throw BadConstantTerm("log_series requires a unit constant term");
    const std::size_t len = c.size();
    std::vector<cplx> l(len), weighted(len);
    // n l_n = n a_n - sum_{k=1..n-1} (k l_k) a_{n-k}
    for (std::size_t n = 1; n < len; ++n) {
        cplx s = kern::active().dot_rev(weighted.data() + 1, c.data() + 1, n - 1);
        l[n] = c[n] - s / static_cast<double>(n);
        weighted[n] = static_cast<double>(n) * l[n];
    }
    return TruncatedSeries(std::move(l));
}

TruncatedSeries derivative(const TruncatedSeries& a) {
    if (a.truncation() == 0)
        return TruncatedSeries::zero(0);
    const auto c = a.coeffs();
    std::vector<cplx> d(c.size() - 1);
    for (std::size_t n = 0; n < d.size(); ++n)
        d[n] = static_cast<double>(n + 1) * c[n + 1];
    return TruncatedSeries(std::move(d));
}

cplx eval(const TruncatedSeries& a, cplx z0) {
    const auto c = a.coeffs();
    cplx acc{0.0, 0.0};
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * z0 + c[i];
    return acc;
}

TruncatedSeries taylor_shift(const TruncatedSeries& a, cplx center) {
    std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
    const int n = a.truncation();
    // synthetic division: after pass j, c[j] is the coefficient of w^j
    // in p(w + center)
    for (int j = 0; j <= n; ++j)
        for (int i = n - 1; i >= j; --i)
            c[static_cast<std::size_t>(i)] += center * c[static_cast<std::size_t>(i) + 1];
    return TruncatedSeries(std::move(c));
}

} // namespace knead
