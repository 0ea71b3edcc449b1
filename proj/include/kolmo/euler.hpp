#pragma once

namespace kolmo {

/// K_r: sup-norm of the Euler perfect spline of order r (the r-th periodic
/// zero-mean antiderivative of sgn sin t), computed from the series
/// (4/pi) * sum_v (-1)^{v(r+1)} / (2v+1)^{r+1} with certified truncation
/// error below 1e-13. Supported for 0 <= r <= max_order.
double favard(int r);

/// Partial Fourier sum of the Euler spline phi_r at t:
/// (4/pi) * sum_{v<terms} sin((2v+1)t - r*pi/2) / (2v+1)^{r+1}.
double euler_spline(int r, double t, int terms = 100000);

/// Bound on |phi_r(t) - euler_spline(r, t, terms)|:
/// (4/pi) * 2 * sum_{v>=terms} (2v+1)^{-(r+1)}.
double euler_spline_tail_bound(int r, int terms);

/// Right-hand side of the classical three-norm inequality: the largest
/// admissible M_k given M_0 and M_r,
///   K_{r-k} / K_r^{1-k/r} * M_0^{1-k/r} * M_r^{k/r},  0 < k < r.
double kolmogorov_bound(double M0, double Mr, int k, int r);

/// Outcome of one feasibility inequality. `margin` is signed (bound minus
/// the tested value); `margin_rel` = margin / bound.
struct ConditionCheck {
    bool holds;
    double margin;
    double bound;
    double margin_rel;
};

/// The three-norm inequality at orders (k, r-2, r):
///   M_{r-2} <= K_2 / K_{r-k}^{2/(r-k)} * M_k^{2/(r-k)} * M_r^{(r-k-2)/(r-k)}.
/// Non-strict: holds when margin >= -tol::feas_rel * (1 + bound).
/// Requires 0 < k < r-2 (hence r >= 4).
ConditionCheck condition_a(double Mk, double Mrm2, double Mr, int k, int r);

} // namespace kolmo
