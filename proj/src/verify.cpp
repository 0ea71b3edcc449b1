#include "kolmo/verify.hpp"

#include "kolmo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace kolmo {

namespace {

constexpr double pi = std::numbers::pi;

/// Central binomial stencil for the k-th derivative at t, second-order
/// accurate; offsets are half-integers for odd k. Long double accumulation
/// keeps the alternating sum's rounding at the sample level.
double fd_stencil(const PeriodicPiecewisePoly& p, int k, double t, double h) {
    long double acc = 0.0L;
    long double binom = 1.0L;
    for (int i = 0; i <= k; ++i) {
        const double offset = (0.5 * k - i) * h;
        const long double term = binom * static_cast<long double>(p.evaluate(t + offset));
        acc += (i % 2 == 0) ? term : -term;
        binom = binom * (k - i) / (i + 1);
    }
    return static_cast<double>(acc / powl(static_cast<long double>(h), k));
}

double fd_estimate(const PeriodicPiecewisePoly& p, int k, double t, double h, int order) {
    if (k == 0)
        return p.evaluate(t);
    const double d2 = fd_stencil(p, k, t, h);
    if (order == 2)
        return d2;
    return (4.0 * fd_stencil(p, k, t, 0.5 * h) - d2) / 3.0;
}

} // namespace

void MeasurementConfig::validate(double period) const {
    if (grid_points < 1000)
        throw std::invalid_argument("grid_points must be >= 1000");
    if (fd_order != 2 && fd_order != 4)
        throw std::invalid_argument("fd_order must be 2 or 4");
    if (!(fd_step > 0.0) || fd_step >= period / 100.0)
        throw StepTooLarge("fd_step must lie in (0, period/100)");
}

double measure_norm(const PeriodicPiecewisePoly& p, int derivative_order,
                    const MeasurementConfig& cfg) {
    if (derivative_order < 0 || derivative_order > p.smoothness() + 1)
        throw std::invalid_argument("derivative order exceeds smoothness + 1");
    cfg.validate(p.period());
    const double step = p.period() / cfg.grid_points;
    double best = 0.0;
    for (int i = 0; i < cfg.grid_points; ++i) {
        const double v = std::abs(fd_estimate(p, derivative_order, i * step, cfg.fd_step, cfg.fd_order));
        if (v > best)
            best = v;
    }
    return best;
}

LevelSpeed::LevelSpeed(const PeriodicPiecewisePoly& psi)
    : dpsi_(psi.derivative()), psi_(psi), sup_(psi.sup_norm()) {
    // Monotone runs: merge consecutive extremum candidates while the value
    // direction does not reverse, then keep the run with the largest swing.
    std::vector<Extremum> cand = psi_.local_extrema();
    cand.push_back({cand.front().t + psi_.period(), cand.front().value});

    double best_swing = -1.0;
    std::size_t i = 0;
    while (i + 1 < cand.size()) {
        std::size_t j = i;
        int dir = 0;
        while (j + 1 < cand.size()) {
            const double dv = cand[j + 1].value - cand[j].value;
            const int d = dv > 0.0 ? 1 : (dv < 0.0 ? -1 : 0);
            if (d != 0 && dir != 0 && d != dir)
                break;
            if (d != 0)
                dir = d;
            ++j;
        }
        const double swing = std::abs(cand[j].value - cand[i].value);
        if (swing > best_swing) {
            best_swing = swing;
            t_lo_ = cand[i].t;
            t_hi_ = cand[j].t;
            v_lo_ = cand[i].value;
            v_hi_ = cand[j].value;
        }
        i = j;
    }
}

double LevelSpeed::operator()(double v) const {
    const double av = std::abs(v);
    if (av > sup_ * (1.0 + 1e-12))
        throw LevelOutOfRange("level exceeds the sup-norm of the comparison function");
    if (av >= sup_)
        return 0.0;
    // clamp into the realized branch range (symmetric up to rounding)
    const double lo = std::min(v_lo_, v_hi_), hi = std::max(v_lo_, v_hi_);
    const double target = std::clamp(v, lo, hi);
    double ta = t_lo_, tb = t_hi_;
    const bool rising = v_hi_ >= v_lo_;
    for (int it = 0; it < 100 && tb - ta > tol::root_abs * (1.0 + psi_.period()); ++it) {
        const double tm = 0.5 * (ta + tb);
        const double vm = psi_.evaluate(tm);
        if ((vm < target) == rising)
            ta = tm;
        else
            tb = tm;
    }
    return std::abs(dpsi_.evaluate(0.5 * (ta + tb)));
}

double level_speed(const PeriodicPiecewisePoly& psi, double v) {
    return LevelSpeed(psi)(v);
}

namespace {

void require_hypothesis(const PeriodicPiecewisePoly& x, const PeriodicPiecewisePoly& Psi, int r) {
    for (int i : {0, r - 2, r}) {
        const double lhs = x.derivative(i).sup_norm();
        const double rhs = Psi.derivative(i).sup_norm();
        if (lhs > rhs * (1.0 + tol::feas_rel))
            throw HypothesisNotMet("norm hypothesis fails at derivative order " + std::to_string(i));
    }
}

} // namespace

ComparisonResult comparison_check(const PeriodicPiecewisePoly& x,
                                  const PeriodicPiecewisePoly& Psi, int r,
                                  std::span<const int> k_list,
                                  const MeasurementConfig& cfg) {
    if (r < 4)
        throw BadOrderPair("comparison check needs r >= 4");
    cfg.validate(x.period());
    require_hypothesis(x, Psi, r);

    std::vector<int> orders = {0};
    for (int s : k_list) {
        if (s < 0 || s >= r - 2)
            throw BadOrderPair("k_list entries must lie in [0, r-2)");
        if (s != 0)
            orders.push_back(s);
    }

    bool ok = true;
    double worst = -std::numeric_limits<double>::infinity();
    const double step = x.period() / cfg.grid_points;
    for (int s : orders) {
        const PeriodicPiecewisePoly xs = x.derivative(s);
        const PeriodicPiecewisePoly xd = xs.derivative();
        const LevelSpeed speed(Psi.derivative(s));
        const double eps_cmp = 1e-8 * (1.0 + Psi.derivative(s + 1).sup_norm());
        double level_worst = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < cfg.grid_points; ++i) {
            const double tau = i * step;
            const double v = std::clamp(xs.evaluate(tau), -speed.sup(), speed.sup());
            const double violation = std::abs(xd.evaluate(tau)) - speed(v);
            if (violation > level_worst)
                level_worst = violation;
        }
        ok = ok && level_worst <= eps_cmp;
        worst = std::max(worst, level_worst);
    }
    return ComparisonResult{ok, worst};
}

VerificationReport run_comparison_report(const PeriodicPiecewisePoly& x,
                                         const PeriodicPiecewisePoly& Psi, int r,
                                         std::span<const int> k_list,
                                         const MeasurementConfig& cfg) {
    VerificationReport rep;
    rep.config = cfg;
    try {
        const ComparisonResult res = comparison_check(x, Psi, r, k_list, cfg);
        rep.hypothesis_met = true;
        rep.ok = res.ok;
        rep.worst_violation = res.worst_violation;
    } catch (const HypothesisNotMet&) {
        rep.hypothesis_met = false;
    }
    return rep;
}

BoundCheckResult k2_bound_check(const PeriodicPiecewisePoly& x,
                                const PeriodicPiecewisePoly& Psi, int k2, int r) {
    if (!(0 < k2 && k2 < r - 2))
        throw BadOrderPair("need 0 < k2 < r-2");
    require_hypothesis(x, Psi, r);
    const double lhs = x.derivative(k2).sup_norm();
    const double rhs = Psi.derivative(k2).sup_norm();
    return BoundCheckResult{lhs <= rhs * (1.0 + 1e-10), lhs, rhs};
}

PeriodicPiecewisePoly sinusoid_ppoly(double amplitude, double omega, double phase) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("omega must be positive");
    const double period = 2.0 * pi / omega;
    constexpr int pieces_per_period = 4;
    constexpr int degree = 11;

    auto f = [&](double t) { return amplitude * std::sin(omega * t + phase); };

    std::vector<double> breaks(pieces_per_period + 1);
    for (int j = 0; j <= pieces_per_period; ++j)
        breaks[j] = period * j / pieces_per_period;
    breaks.back() = period;

    std::vector<std::vector<double>> pieces;
    for (int j = 0; j < pieces_per_period; ++j) {
        const double left = breaks[j];
        const double len = breaks[j + 1] - left;
        // Chebyshev-Lobatto nodes in the local variable
        std::vector<double> u(degree + 1), y(degree + 1);
        for (int i = 0; i <= degree; ++i) {
            u[i] = 0.5 * len * (1.0 - std::cos(pi * i / degree));
            y[i] = f(left + u[i]);
        }
        // Newton divided differences, then expansion to monomials
        std::vector<double> dd = y;
        for (int lev = 1; lev <= degree; ++lev)
            for (int i = degree; i >= lev; --i)
                dd[i] = (dd[i] - dd[i - 1]) / (u[i] - u[i - lev]);
        std::vector<double> c = {dd[degree]};
        for (int i = degree - 1; i >= 0; --i) {
            c.insert(c.begin(), 0.0);
            for (std::size_t m = 0; m + 1 < c.size(); ++m)
                c[m] -= u[i] * c[m + 1];
            c[0] += dd[i];
        }
        pieces.push_back(std::move(c));
    }

    PeriodicPiecewisePoly out(period, std::move(breaks), std::move(pieces), degree);
    // certify the interpolation error
    const double tolerance = 1e-12 * (1.0 + std::abs(amplitude));
    for (int i = 0; i < 800; ++i) {
        const double t = period * i / 800.0;
        if (std::abs(out.evaluate(t) - f(t)) > tolerance)
            throw std::logic_error("sinusoid interpolation error above certification threshold");
    }
    return out;
}

PeriodicPiecewisePoly translate(const PeriodicPiecewisePoly& p, double alpha) {
    const double period = p.period();
    double shift = std::fmod(alpha, period);
    if (shift < 0.0)
        shift += period;
    if (shift == 0.0)
        return p;

    // new breakpoints: images of the old ones under t -> t - shift (mod period)
    std::vector<double> nb;
    for (double t : p.breakpoints()) {
        double s = std::fmod(t - shift + period, period);
        if (s < 0.0)
            s += period;
        nb.push_back(s);
    }
    nb.push_back(0.0);
    nb.push_back(period);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end(),
                         [&](double x, double y) { return std::abs(x - y) < 1e-15 * period; }),
             nb.end());
    nb.front() = 0.0;
    nb.back() = period;

    const auto& breaks = p.breakpoints();
    std::vector<std::vector<double>> np;
    for (std::size_t j = 0; j + 1 < nb.size(); ++j) {
        // locate the source piece from an interior probe, then anchor the
        // left edge with the same wrap offset so the two cannot disagree
        // about which side of the period boundary the interval sits on
        const double probe = nb[j] + 0.25 * (nb[j + 1] - nb[j]) + shift;
        double w = std::fmod(probe, period);
        if (w < 0.0)
            w += period;
        const double wrap_offset = probe - w;
        auto it = std::upper_bound(breaks.begin(), breaks.end(), w);
        const std::size_t piece = static_cast<std::size_t>(it - breaks.begin()) - 1;
        const double u0 = nb[j] + shift - wrap_offset - breaks[piece];
        // Taylor shift: q(w) = piece(u0 + w)
        std::vector<double> c = p.pieces()[piece];
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            for (std::size_t k = c.size() - 1; k-- > i;)
                c[k] += u0 * c[k + 1];
        np.push_back(std::move(c));
    }
    return PeriodicPiecewisePoly(period, std::move(nb), std::move(np), p.smoothness());
}

} // namespace kolmo
