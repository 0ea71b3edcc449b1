#pragma once

#include "kolmo/ppoly.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace kolmo {

/// Largest supported spline order. Repeated binary64 integration beyond this
/// starts to erode the junction invariant.
inline constexpr int max_order = 16;

/// One-period layout of the plateau spline of order 1: on [0, a+2] the values
/// are t-1, then 0 on the plateau [1, a+1], then t-a-1; extended evenly and
/// (4+2a)-periodically. The even extension is realized as explicit mirrored
/// pieces on [a+2, 2a+4), so every evaluation takes the same path.
/// Smoothness 0. Throws NegativePlateau if a < 0.
PeriodicPiecewisePoly build_psi1(double a);

/// Zero and extremum landmarks of a plateau spline over one period.
struct Landmarks {
    std::vector<double> zeros;
    std::vector<Extremum> extrema;
};

/// The plateau spline of order r: the (r-1)-th periodic zero-mean
/// antiderivative of the order-1 spline, with plateau parameter a >= 0 and
/// period 4+2a. Immutable; the per-derivative norm cache is write-once and
/// shared across copies.
class PsiSpline {
public:
    PsiSpline(double a, int r);

    double a() const { return a_; }
    int order() const { return r_; }
    const PeriodicPiecewisePoly& poly() const { return f_; }

    /// Sup-norm of the s-th derivative, i.e. of the order (r-s) spline,
    /// 0 <= s <= r-1. Cached after first computation.
    double norm(int s = 0) const;

    /// The two zeros and the two extrema per period. For even r the zeros sit
    /// at {0, a+2}; for odd r at {1+a/2, 3+3a/2}; extrema are at the zeros of
    /// the derivative (opposite parity). Requires r >= 2.
    Landmarks landmarks() const;

private:
    double a_;
    int r_;
    PeriodicPiecewisePoly f_;
    struct NormCache {
        std::mutex m;
        std::vector<std::optional<double>> v;
    };
    std::shared_ptr<NormCache> cache_;
};

/// Convenience builder mirroring PsiSpline's constructor.
PsiSpline build_psi(double a, int r);

/// N_s(a): sup-norm of the order-s plateau spline, s >= 1.
double psi_norm(double a, int s);

} // namespace kolmo
