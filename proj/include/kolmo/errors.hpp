#pragma once

#include <stdexcept>
#include <string>

namespace kolmo {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Plateau parameter a < 0.
struct NegativePlateau : Error {
    using Error::Error;
};

/// antiderivative_zero_mean called on a function whose mean is not zero;
/// the periodic antiderivative would not exist.
struct NonZeroMeanInput : Error {
    using Error::Error;
};

/// Time-scale factor lambda <= 0 passed to scale().
struct NonPositiveScale : Error {
    using Error::Error;
};

/// Spline order too small for the requested structural query.
struct OrderTooLow : Error {
    using Error::Error;
};

/// Order outside the supported range [0, max_order].
struct OrderOutOfRange : Error {
    using Error::Error;
};

/// Derivative order pair (k, r) violates the required strict ordering.
struct BadOrderPair : Error {
    using Error::Error;
};

/// The triple (M_k, M_{r-2}, M_r) violates the three-norm inequality;
/// no admissible plateau parameter exists.
struct InfeasibleTriple : Error {
    using Error::Error;
};

/// Operation requires a feasible report.
struct NotFeasible : Error {
    using Error::Error;
};

/// Finite-difference step outside (0, period/100).
struct StepTooLarge : Error {
    using Error::Error;
};

/// Level |v| exceeds the sup-norm of the comparison function.
struct LevelOutOfRange : Error {
    using Error::Error;
};

/// The norm hypotheses of the comparison theorem do not hold for the
/// candidate pair, so the pointwise comparison is not applicable.
struct HypothesisNotMet : Error {
    using Error::Error;
};

} // namespace kolmo
