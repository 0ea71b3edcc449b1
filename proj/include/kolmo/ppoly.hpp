#pragma once

#include <vector>

namespace kolmo {

/// Shared numerical tolerances. Stated once, used everywhere.
namespace tol {
/// Piece-junction mismatch allowance, scaled by (1 + max|coeff|).
inline constexpr double stitch_rel = 1e-10;
/// Zero-mean allowance, scaled by period * (1 + sup|p|).
inline constexpr double mean_rel = 1e-12;
/// Abscissa tolerance for extremum isolation.
inline constexpr double root_abs = 1e-12;
/// Feasibility slack for the non-strict inequalities, scaled by (1 + bound).
inline constexpr double feas_rel = 1e-10;
} // namespace tol

/// A located extremum candidate: abscissa within [0, period) and value there.
struct Extremum {
    double t;
    double value;
};

/// Periodic function represented exactly as polynomial pieces.
///
/// The period [0, period) is split by strictly increasing breakpoints
/// t_0 = 0 < t_1 < ... < t_m = period. On [t_j, t_{j+1}] the function is the
/// polynomial p_j(u) = sum c_i u^i in the local variable u = t - t_j (local
/// coordinates avoid cancellation for breakpoints far from the origin).
/// `smoothness` is the asserted continuity class C^s across all junctions
/// including the wrap t_m -> t_0.
///
/// Values are immutable after construction; all operations return new
/// objects and are safe to call concurrently.
class PeriodicPiecewisePoly {
public:
    /// Zero-length pieces are dropped; breakpoints must otherwise be strictly
    /// increasing with t_0 = 0 and t_m = period. Throws std::invalid_argument
    /// on malformed input. The C^s junction property is *not* verified here;
    /// see validate_smoothness().
    PeriodicPiecewisePoly(double period,
                          std::vector<double> breakpoints,
                          std::vector<std::vector<double>> pieces,
                          int smoothness);

    double period() const { return period_; }
    const std::vector<double>& breakpoints() const { return breaks_; }
    const std::vector<std::vector<double>>& pieces() const { return pieces_; }
    int smoothness() const { return smoothness_; }
    int piece_count() const { return static_cast<int>(pieces_.size()); }
    /// Maximum polynomial degree over all pieces.
    int degree() const;
    /// True when this object was produced by differentiating a C^0 function,
    /// i.e. it is the a.e. derivative only.
    bool weak_derivative() const { return weak_derivative_; }

    /// Value at arbitrary t (reduced modulo the period).
    double evaluate(double t) const;
    double operator()(double t) const { return evaluate(t); }

    /// Piecewise formal derivative; smoothness decremented (floor 0).
    PeriodicPiecewisePoly derivative() const;
    /// k-fold derivative.
    PeriodicPiecewisePoly derivative(int k) const;

    /// The periodic antiderivative with zero mean over the period.
    /// Throws NonZeroMeanInput when |mean| exceeds the mean tolerance, since
    /// no periodic antiderivative exists then.
    PeriodicPiecewisePoly antiderivative_zero_mean() const;

    /// Exact integral over one period divided by the period.
    double mean() const;

    /// max |p| over the period. Exact for degree <= 2; otherwise extrema are
    /// isolated by derivative sign changes on a Chebyshev-density grid of
    /// 8*degree points per piece, refined by bisection to tol::root_abs.
    double sup_norm() const;

    /// Location and value realizing sup_norm().
    Extremum abs_max() const;

    /// All extremum candidates over one period: piece endpoints plus interior
    /// critical points, sorted by abscissa.
    std::vector<Extremum> local_extrema() const;

    /// t -> b * p(lambda t). Period divided by lambda. Throws NonPositiveScale
    /// unless lambda > 0.
    PeriodicPiecewisePoly scale(double b, double lambda) const;

    /// p + c; only degree-0 coefficients change.
    PeriodicPiecewisePoly add_constant(double c) const;

    double max_abs_coeff() const;
    /// tol::stitch_rel * (1 + max|coeff|).
    double stitch_tolerance() const;
    /// Worst junction mismatch over derivative orders 0..smoothness, including
    /// the wrap point.
    double max_stitch_defect() const;
    /// Throws std::logic_error if the junction mismatch exceeds the stitching
    /// tolerance for the asserted smoothness class.
    void validate_smoothness() const;

private:
    double period_;
    std::vector<double> breaks_;              // size m+1, breaks_[0] = 0, breaks_[m] = period
    std::vector<std::vector<double>> pieces_; // size m, coefficients lowest-first
    int smoothness_ = 0;
    bool weak_derivative_ = false;

    int piece_index(double u) const; // u in [0, period)
};

} // namespace kolmo
