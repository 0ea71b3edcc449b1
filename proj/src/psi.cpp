#include "kolmo/psi.hpp"

#include "kolmo/errors.hpp"

#include <cmath>
#include <utility>

namespace kolmo {

PeriodicPiecewisePoly build_psi1(double a) {
    if (a < 0.0 || !std::isfinite(a))
        throw NegativePlateau("plateau parameter a must be >= 0");
    const double period = 4.0 + 2.0 * a;
    // Local-variable coefficients; plateau pieces collapse away when a = 0.
    std::vector<double> breaks = {0.0, 1.0, a + 1.0, a + 2.0, a + 3.0, 2.0 * a + 3.0, period};
    std::vector<std::vector<double>> pieces = {
        {-1.0, 1.0}, // t - 1
        {0.0},       // plateau
        {0.0, 1.0},  // t - a - 1
        {1.0, -1.0}, // mirrored ramp down
        {0.0},       // mirrored plateau
        {0.0, -1.0}, // mirrored final ramp
    };
    return PeriodicPiecewisePoly(period, std::move(breaks), std::move(pieces), 0);
}

PsiSpline::PsiSpline(double a, int r)
    : a_(a), r_(r), f_(build_psi1(a)), cache_(std::make_shared<NormCache>()) {
    if (r < 1 || r > max_order)
        throw OrderOutOfRange("spline order must be in [1, 16]");
    for (int i = 1; i < r; ++i)
        f_ = f_.antiderivative_zero_mean();
    cache_->v.resize(static_cast<std::size_t>(r));
}

double PsiSpline::norm(int s) const {
    if (s < 0 || s >= r_)
        throw OrderOutOfRange("derivative order must be in [0, r-1]");
    {
        std::lock_guard lock(cache_->m);
        if (cache_->v[s])
            return *cache_->v[s];
    }
    const double value = f_.derivative(s).sup_norm();
    std::lock_guard lock(cache_->m);
    if (!cache_->v[s])
        cache_->v[s] = value;
    return *cache_->v[s];
}

Landmarks PsiSpline::landmarks() const {
    if (r_ < 2)
        throw OrderTooLow("landmarks need order r >= 2");
    const bool even = r_ % 2 == 0;
    const std::vector<double> zeros =
        even ? std::vector<double>{0.0, a_ + 2.0}
             : std::vector<double>{1.0 + a_ / 2.0, 3.0 + 1.5 * a_};
    const std::vector<double> extremum_ts =
        even ? std::vector<double>{1.0 + a_ / 2.0, 3.0 + 1.5 * a_}
             : std::vector<double>{0.0, a_ + 2.0};
    Landmarks lm;
    lm.zeros = zeros;
    for (double t : extremum_ts)
        lm.extrema.push_back({t, f_.evaluate(t)});
    return lm;
}

PsiSpline build_psi(double a, int r) {
    return PsiSpline(a, r);
}

double psi_norm(double a, int s) {
    if (s < 1)
        throw OrderOutOfRange("spline order must be >= 1");
    return PsiSpline(a, s).norm(0);
}

} // namespace kolmo
