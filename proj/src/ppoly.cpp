#include "kolmo/ppoly.hpp"

#include "kolmo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kolmo {

namespace {

double horner(const std::vector<double>& c, double u) {
    double y = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        y = y * u + *it;
    return y;
}

std::vector<double> poly_derivative(const std::vector<double>& c) {
    if (c.size() <= 1)
        return {0.0};
    std::vector<double> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        d[i - 1] = static_cast<double>(i) * c[i];
    return d;
}

/// Critical points of the piece polynomial inside (0, len): sign changes of
/// the derivative bracketed on a Chebyshev-density grid, then bisected.
std::vector<double> critical_points(const std::vector<double>& coeffs, double len) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    std::vector<double> out;
    if (deg < 2)
        return out; // constant or linear: extrema at endpoints only

    const std::vector<double> d = poly_derivative(coeffs);
    if (deg == 2) {
        // closed form: d is linear
        if (d[1] != 0.0) {
            const double u = -d[0] / d[1];
            if (u > 0.0 && u < len)
                out.push_back(u);
        }
        return out;
    }

    const int n = 8 * deg;
    std::vector<double> grid(n + 1);
    for (int i = 0; i <= n; ++i)
        grid[i] = 0.5 * len * (1.0 - std::cos(std::numbers::pi * i / n));
    grid.front() = 0.0;
    grid.back() = len;

    double prev = horner(d, grid[0]);
    for (int i = 1; i <= n; ++i) {
        const double cur = horner(d, grid[i]);
        if (prev == 0.0 && grid[i - 1] > 0.0) {
            out.push_back(grid[i - 1]);
        } else if (prev * cur < 0.0) {
            double lo = grid[i - 1], hi = grid[i];
            double flo = prev;
            while (hi - lo > tol::root_abs) {
                const double mid = 0.5 * (lo + hi);
                const double fm = horner(d, mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (flo * fm < 0.0)
                    hi = mid;
                else {
                    lo = mid;
                    flo = fm;
                }
            }
            out.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    return out;
}

} // namespace

PeriodicPiecewisePoly::PeriodicPiecewisePoly(double period,
                                             std::vector<double> breakpoints,
                                             std::vector<std::vector<double>> pieces,
                                             int smoothness)
    : period_(period), smoothness_(smoothness) {
    if (!(period > 0.0) || !std::isfinite(period))
        throw std::invalid_argument("period must be positive and finite");
    if (breakpoints.size() < 2 || pieces.size() + 1 != breakpoints.size())
        throw std::invalid_argument("need m+1 breakpoints for m pieces");
    if (breakpoints.front() != 0.0)
        throw std::invalid_argument("first breakpoint must be 0");
    if (breakpoints.back() != period)
        throw std::invalid_argument("last breakpoint must equal the period");
    if (smoothness < 0)
        throw std::invalid_argument("smoothness must be >= 0");

    breaks_.reserve(breakpoints.size());
    pieces_.reserve(pieces.size());
    breaks_.push_back(0.0);
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        const double len = breakpoints[j + 1] - breakpoints[j];
        if (len < 0.0)
            throw std::invalid_argument("breakpoints must be non-decreasing");
        if (len == 0.0)
            continue; // zero-length pieces dropped (collapsed plateau)
        if (pieces[j].empty())
            throw std::invalid_argument("piece coefficient list must be non-empty");
        breaks_.push_back(breakpoints[j + 1]);
        pieces_.push_back(std::move(pieces[j]));
    }
    if (pieces_.empty())
        throw std::invalid_argument("all pieces have zero length");
}

int PeriodicPiecewisePoly::degree() const {
    std::size_t d = 1;
    for (const auto& c : pieces_)
        d = std::max(d, c.size());
    return static_cast<int>(d) - 1;
}

int PeriodicPiecewisePoly::piece_index(double u) const {
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), u);
    int j = static_cast<int>(it - breaks_.begin()) - 1;
    if (j < 0)
        j = 0;
    if (j >= piece_count())
        j = piece_count() - 1;
    return j;
}

double PeriodicPiecewisePoly::evaluate(double t) const {
    double u = std::fmod(t, period_);
    if (u < 0.0)
        u += period_;
    if (u >= period_) // fmod may land exactly on period after the fixup
        u = 0.0;
    const int j = piece_index(u);
    return horner(pieces_[j], u - breaks_[j]);
}

PeriodicPiecewisePoly PeriodicPiecewisePoly::derivative() const {
    std::vector<std::vector<double>> dp;
    dp.reserve(pieces_.size());
    for (const auto& c : pieces_)
        dp.push_back(poly_derivative(c));
    PeriodicPiecewisePoly out(period_, breaks_, std::move(dp), std::max(smoothness_ - 1, 0));
    out.weak_derivative_ = weak_derivative_ || smoothness_ == 0;
    return out;
}

PeriodicPiecewisePoly PeriodicPiecewisePoly::derivative(int k) const {
    if (k < 0)
        throw std::invalid_argument("derivative order must be >= 0");
    PeriodicPiecewisePoly out = *this;
    for (int i = 0; i < k; ++i)
        out = out.derivative();
    return out;
}

double PeriodicPiecewisePoly::mean() const {
    double total = 0.0;
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
        const double len = breaks_[j + 1] - breaks_[j];
        const auto& c = pieces_[j];
        // integral of sum c_i u^i over [0, len], Horner in len
        double s = 0.0;
        for (std::size_t i = c.size(); i-- > 0;)
            s = s * len + c[i] / static_cast<double>(i + 1);
        total += s * len;
    }
    return total / period_;
}

PeriodicPiecewisePoly PeriodicPiecewisePoly::antiderivative_zero_mean() const {
    const double mean_tol = tol::mean_rel * period_ * (1.0 + sup_norm());
    if (std::abs(mean()) > mean_tol)
        throw NonZeroMeanInput("mean over the period is not zero; no periodic antiderivative");

    std::vector<std::vector<double>> q;
    q.reserve(pieces_.size());
    double carry = 0.0; // running value at the left edge of the next piece
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
        const auto& c = pieces_[j];
        std::vector<double> P(c.size() + 1);
        P[0] = carry;
        for (std::size_t i = 0; i < c.size(); ++i)
            P[i + 1] = c[i] / static_cast<double>(i + 1);
        carry = horner(P, breaks_[j + 1] - breaks_[j]);
        q.push_back(std::move(P));
    }
    PeriodicPiecewisePoly out(period_, breaks_, std::move(q), smoothness_ + 1);
    const double m = out.mean();
    for (auto& c : out.pieces_)
        c[0] -= m;
    return out;
}

std::vector<Extremum> PeriodicPiecewisePoly::local_extrema() const {
    std::vector<Extremum> out;
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
        const double left = breaks_[j];
        const double len = breaks_[j + 1] - left;
        const auto& c = pieces_[j];
        // right endpoints are covered by the next piece's left endpoint
        // (the last one wraps to t = 0)
        out.push_back({left, horner(c, 0.0)});
        for (double u : critical_points(c, len))
            out.push_back({left + u, horner(c, u)});
    }
    std::sort(out.begin(), out.end(), [](const Extremum& x, const Extremum& y) { return x.t < y.t; });
    return out;
}

double PeriodicPiecewisePoly::sup_norm() const {
    return std::abs(abs_max().value);
}

Extremum PeriodicPiecewisePoly::abs_max() const {
    Extremum best{0.0, evaluate(0.0)};
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
        const double left = breaks_[j];
        const double len = breaks_[j + 1] - left;
        const auto& c = pieces_[j];
        auto consider = [&](double u) {
            const double v = horner(c, u);
            if (std::abs(v) > std::abs(best.value))
                best = {left + u, v};
        };
        consider(0.0);
        consider(len);
        for (double u : critical_points(c, len))
            consider(u);
    }
    if (best.t >= period_)
        best.t -= period_;
    return best;
}

PeriodicPiecewisePoly PeriodicPiecewisePoly::scale(double b, double lambda) const {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw NonPositiveScale("time-scale factor lambda must be positive");
    std::vector<double> nb(breaks_.size());
    for (std::size_t j = 0; j < breaks_.size(); ++j)
        nb[j] = breaks_[j] / lambda;
    nb.back() = period_ / lambda; // keep the wrap breakpoint bit-identical to the period
    std::vector<std::vector<double>> np(pieces_.size());
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
        np[j].resize(pieces_[j].size());
        double pw = b;
        for (std::size_t i = 0; i < pieces_[j].size(); ++i) {
            np[j][i] = pieces_[j][i] * pw;
            pw *= lambda;
        }
    }
    PeriodicPiecewisePoly out(period_ / lambda, std::move(nb), std::move(np), smoothness_);
    out.weak_derivative_ = weak_derivative_;
    return out;
}

PeriodicPiecewisePoly PeriodicPiecewisePoly::add_constant(double c) const {
    PeriodicPiecewisePoly out = *this;
    for (auto& piece : out.pieces_)
        piece[0] += c;
    return out;
}

double PeriodicPiecewisePoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : pieces_)
        for (double v : c)
            m = std::max(m, std::abs(v));
    return m;
}

double PeriodicPiecewisePoly::stitch_tolerance() const {
    return tol::stitch_rel * (1.0 + max_abs_coeff());
}

double PeriodicPiecewisePoly::max_stitch_defect() const {
    double worst = 0.0;
    std::vector<std::vector<double>> ders(pieces_.size());
    for (std::size_t j = 0; j < pieces_.size(); ++j)
        ders[j] = pieces_[j];
    for (int s = 0; s <= smoothness_; ++s) {
        for (std::size_t j = 0; j < pieces_.size(); ++j) {
            const std::size_t nj = (j + 1) % pieces_.size();
            const double len = breaks_[j + 1] - breaks_[j];
            const double right = horner(ders[j], len);
            const double left = horner(ders[nj], 0.0);
            worst = std::max(worst, std::abs(right - left));
        }
        for (auto& d : ders)
            d = poly_derivative(d);
    }
    return worst;
}

void PeriodicPiecewisePoly::validate_smoothness() const {
    if (max_stitch_defect() > stitch_tolerance())
        throw std::logic_error("piece junctions violate the asserted smoothness class");
}

} // namespace kolmo
