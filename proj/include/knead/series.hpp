#pragma once

#include "knead/errors.hpp"
#include "knead/kernels.hpp"

#include <span>
#include <vector>

namespace knead {

/// A formal power series over the complex numbers, truncated modulo
/// z^{N+1}. Stores the coefficients of z^0 .. z^N; N is the truncation
/// order. Immutable after construction; every operation returns a new
/// value. Binary operations demand equal truncations — mixing them is
/// an error, never an implicit coercion.
class TruncatedSeries {
public:
    /// Takes ownership of the coefficient vector; must be non-empty.
    explicit TruncatedSeries(std::vector<cplx> coeffs);

    static TruncatedSeries zero(int truncation);
    static TruncatedSeries one(int truncation);
    static TruncatedSeries constant(cplx value, int truncation);
    /// coeffs may be shorter than truncation+1; missing entries are zero.
    static TruncatedSeries from_coeffs(std::vector<cplx> coeffs, int truncation);

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const cplx> coeffs() const { return coeffs_; }
    cplx coeff(int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    cplx operator[](int n) const { return coeff(n); }

    /// max |c_k|; the scale every relative tolerance refers to.
    double scale() const;

    bool is_zero() const { return scale() == 0.0; }

private:
    std::vector<cplx> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated at the common truncation.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries mul_scalar(cplx s, const TruncatedSeries& a);

/// Multiplicative inverse in the truncated ring; requires the constant
/// term to be bounded away from zero (|c_0| > 1e-12 * scale).
TruncatedSeries invert(const TruncatedSeries& a);

/// Drops the (analytically vanishing) constant term and divides by z;
/// result has truncation N-1. |c_0| <= 1e-8 * scale is enforced and the
/// magnitude of the dropped term, a numerical-health diagnostic, is
/// written to *dropped when given.
TruncatedSeries shift_div_z(const TruncatedSeries& a, double* dropped = nullptr);

/// exp of a series with zero constant term.
TruncatedSeries exp_series(const TruncatedSeries& a);

/// log of a series with unit constant term.
TruncatedSeries log_series(const TruncatedSeries& a);

/// Formal derivative; truncation drops by one (constants map to the
/// zero series at truncation 0).
TruncatedSeries derivative(const TruncatedSeries& a);

/// Horner evaluation of the truncation polynomial.
cplx eval(const TruncatedSeries& a, cplx z0);

/// Re-centers the truncation polynomial: returns q with
/// q(w) = p(w + center) as an exact polynomial identity.
TruncatedSeries taylor_shift(const TruncatedSeries& a, cplx center);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator*(cplx s, const TruncatedSeries& a) { return mul_scalar(s, a); }

} // namespace knead
