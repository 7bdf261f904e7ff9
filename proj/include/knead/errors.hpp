#pragma once

#include <stdexcept>
#include <string>

namespace knead {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Binary series operation applied to operands of different truncation.
struct TruncationMismatch : Error {
    using Error::Error;
};

/// invert() on a series whose constant term is (numerically) zero.
struct NonInvertibleConstantTerm : Error {
    using Error::Error;
};

/// shift_div_z() on a series whose constant term does not vanish.
struct NonzeroConstantTerm : Error {
    using Error::Error;
};

/// exp_series()/log_series() constant-term precondition violated.
struct BadConstantTerm : Error {
    using Error::Error;
};

/// Series LU hit a pivot without an invertible constant term.
struct PivotNotInvertible : Error {
    using Error::Error;
};

/// Operation requires a finite-order recurrence.
struct InfiniteOrder : Error {
    using Error::Error;
};

/// Asymptotic analysis requires a holomorphy radius greater than one.
struct HypothesisViolated : Error {
    using Error::Error;
};

/// Results changed between truncations N and 2N; refuse to report them.
struct TruncationUnstable : Error {
    using Error::Error;
};

/// Local expansion of the kneading determinant inconsistent with the
/// claimed zero order.
struct MultiplicityMismatch : Error {
    using Error::Error;
};

/// Input document failed schema validation.
struct SchemaError : Error {
    using Error::Error;
};

} // namespace knead
