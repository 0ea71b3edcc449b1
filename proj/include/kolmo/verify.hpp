#pragma once

#include "kolmo/ppoly.hpp"

#include <span>

namespace kolmo {

/// Knobs for the sampling-based norm oracle.
struct MeasurementConfig {
    int grid_points = 200000; ///< samples per period
    double fd_step = 1e-5;
    int fd_order = 2; ///< central-stencil accuracy order, 2 or 4

    /// grid_points >= 1000 and fd_step in (0, period/100); throws
    /// StepTooLarge / std::invalid_argument otherwise.
    void validate(double period) const;
};

/// Norm of the k-th derivative estimated independently of the analytic
/// differentiation path: central finite differences (binomial stencil; the
/// order-4 variant is its Richardson extrapolation) applied to point samples
/// over a uniform grid. Error is O(fd_step^fd_order) within pieces plus a
/// grid-gap term and roundoff O(2^k eps ||p|| / fd_step^k).
double measure_norm(const PeriodicPiecewisePoly& p, int derivative_order,
                    const MeasurementConfig& cfg = {});

/// |Psi'(xi)| as a function of the level v = Psi(xi), well defined for
/// comparison-type shapes because every level is reached once per monotone
/// branch and branches are reflections of each other. Reusable: the branch
/// and the derivative are located once at construction.
class LevelSpeed {
public:
    explicit LevelSpeed(const PeriodicPiecewisePoly& psi);

    /// Throws LevelOutOfRange when |v| > sup * (1 + 1e-12); returns 0 at
    /// |v| >= sup (extrema, including flat plateau bottoms).
    double operator()(double v) const;

    double sup() const { return sup_; }

private:
    PeriodicPiecewisePoly dpsi_;
    PeriodicPiecewisePoly psi_;
    double sup_;
    double t_lo_, t_hi_; // monotone run, t_hi_ may exceed the period
    double v_lo_, v_hi_;
};

/// Single-call form of LevelSpeed.
double level_speed(const PeriodicPiecewisePoly& psi, double v);

struct ComparisonResult {
    bool ok;
    double worst_violation;
};

/// comparison_check outcome with the hypothesis failure folded in as data
/// instead of an exception, for serialization.
struct VerificationReport {
    bool hypothesis_met = false;
    bool ok = false;
    double worst_violation = 0.0;
    MeasurementConfig config;
};

/// Pointwise speed comparison: with the norm hypotheses verified at orders
/// {0, r-2, r} (throws HypothesisNotMet otherwise), checks
/// |x'(tau)| <= |Psi'(xi)| at matched levels x(tau) = Psi(xi) over a sample
/// grid, with slack 1e-8 * (1 + ||Psi'||). Entries of k_list additionally run
/// the same check on the corresponding derivative pairs.
ComparisonResult comparison_check(const PeriodicPiecewisePoly& x,
                                  const PeriodicPiecewisePoly& Psi, int r,
                                  std::span<const int> k_list,
                                  const MeasurementConfig& cfg = {});

/// comparison_check wrapped into a report.
VerificationReport run_comparison_report(const PeriodicPiecewisePoly& x,
                                         const PeriodicPiecewisePoly& Psi, int r,
                                         std::span<const int> k_list,
                                         const MeasurementConfig& cfg = {});

struct BoundCheckResult {
    bool ok;
    double lhs;
    double rhs;
};

/// ||x^(k2)|| <= ||Psi^(k2)|| under the same hypotheses as comparison_check.
BoundCheckResult k2_bound_check(const PeriodicPiecewisePoly& x,
                                const PeriodicPiecewisePoly& Psi, int k2, int r);

/// A * sin(omega * t + phase) as a piecewise polynomial: degree-11
/// Chebyshev-Lobatto interpolant per quarter period, interpolation error
/// certified below 1e-12 * (1 + |A|) at construction.
PeriodicPiecewisePoly sinusoid_ppoly(double amplitude, double omega, double phase = 0.0);

/// t -> p(t + alpha), re-anchored on [0, period). Exact up to Taylor-shift
/// rounding of the piece coefficients; all derivative norms are preserved.
PeriodicPiecewisePoly translate(const PeriodicPiecewisePoly& p, double alpha);

} // namespace kolmo
