// Independent numerical oracles used by the test suites. Everything here is
// deliberately dumb and slow: dense sampling, quadrature, closed forms known
// ahead of time. None of it calls the analytic code paths it is checking.
#pragma once

#include "kolmo/ppoly.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace oracles {

/// max |p(t)| by dense uniform sampling over one period.
inline double dense_abs_max(const kolmo::PeriodicPiecewisePoly& p, int samples = 1000000) {
    double best = 0.0;
    const double step = p.period() / samples;
    for (int i = 0; i < samples; ++i)
        best = std::max(best, std::abs(p.evaluate(i * step)));
    return best;
}

/// Composite Simpson integral of an arbitrary callable.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
    if (n % 2 == 1)
        ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i)
        s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
}

/// Central first-derivative estimate.
inline double fd1(const std::function<double(double)>& f, double t, double h = 1e-5) {
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

// Closed forms obtained by symbolic piecewise integration of the plateau
// splines (independent of the repeated-integration implementation).
inline double n3_closed(double a) { return 1.0 / 3.0 + a / 4.0; }
inline double n4_closed(double a) { return 5.0 / 24.0 + a / 4.0 + a * a / 16.0; }

// Classical Favard constants.
inline double favard1() { return std::numbers::pi / 2.0; }
inline double favard2() { return std::numbers::pi * std::numbers::pi / 8.0; }
inline double favard3() { return std::numbers::pi * std::numbers::pi * std::numbers::pi / 24.0; }

} // namespace oracles
