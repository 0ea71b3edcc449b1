#include "kolmo/euler.hpp"

#include "kolmo/errors.hpp"
#include "kolmo/ppoly.hpp"
#include "kolmo/psi.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kolmo {

namespace {

constexpr double pi = std::numbers::pi;

/// x^n by binary exponentiation, n >= 0.
long double powi(long double x, int n) {
    long double out = 1.0L;
    while (n > 0) {
        if (n & 1)
            out *= x;
        x *= x;
        n >>= 1;
    }
    return out;
}

/// Series value for K_r, r >= 1. For odd r the series is all-positive and we
/// close the tail with Euler-Maclaurin correction terms; for even r it
/// alternates and consecutive terms are paired into a fast-decaying positive
/// series. Truncation error certified below 1e-13 either way.
double favard_series(int r) {
    const int s = r + 1;
    const double sd = static_cast<double>(s);
    long double sum = 0.0L;
    if (r % 2 == 1) {
        constexpr int n = 100000;
        for (int v = n - 1; v >= 0; --v)
            sum += powi(1.0L / (2.0L * v + 1.0L), s);
        // Euler-Maclaurin tail from v = n: integral + half-sample + f'/12 term.
        const long double ix = 1.0L / (2.0L * n + 1.0L);
        const long double tail = powi(ix, s - 1) / (2.0L * (sd - 1.0L))
                               + powi(ix, s) / 2.0L
                               + sd * powi(ix, s + 1) / 6.0L;
        const double next =
            8.0 * sd * (sd + 1.0) * (sd + 2.0) * static_cast<double>(powi(ix, s + 3)) / 720.0;
        if (4.0 / pi * next >= 1e-13)
            throw std::logic_error("series tail not certified below 1e-13");
        sum += tail;
    } else {
        constexpr int n = 100000;
        for (int j = n - 1; j >= 0; --j)
            sum += powi(1.0L / (4.0L * j + 1.0L), s) - powi(1.0L / (4.0L * j + 3.0L), s);
        // paired-series tail below (4n+1)^{-s} / 2
        const double bound = 0.5 * static_cast<double>(powi(1.0L / (4.0 * n + 1.0L), s));
        if (4.0 / pi * bound >= 1e-13)
            throw std::logic_error("series tail not certified below 1e-13");
    }
    return static_cast<double>(4.0L / static_cast<long double>(pi) * sum);
}

struct FavardTable {
    std::array<double, max_order + 1> values{};
    FavardTable() {
        values[0] = 1.0; // sup-norm of the generating square wave; the
                         // alternating series equals it but converges too
                         // slowly to truncate at 1e-13
        for (int r = 1; r <= max_order; ++r)
            values[r] = favard_series(r);
    }
};

const FavardTable& favard_table() {
    static const FavardTable table;
    return table;
}

} // namespace

double favard(int r) {
    if (r < 0 || r > max_order)
        throw OrderOutOfRange("Euler spline order must be in [0, 16]");
    return favard_table().values[r];
}

double euler_spline(int r, double t, int terms) {
    if (r < 0 || r > max_order)
        throw OrderOutOfRange("Euler spline order must be in [0, 16]");
    if (terms < 1)
        throw std::invalid_argument("need at least one term");
    const double phase = r * pi / 2.0;
    long double sum = 0.0L;
    for (int v = terms - 1; v >= 0; --v) {
        const double n = 2.0 * v + 1.0;
        sum += std::sin(n * t - phase) * powi(1.0L / n, r + 1);
    }
    return static_cast<double>(4.0L / static_cast<long double>(pi) * sum);
}

double euler_spline_tail_bound(int r, int terms) {
    if (r < 1)
        throw OrderOutOfRange("tail bound needs r >= 1");
    // 2 * sum_{v>=terms} (2v+1)^{-(r+1)} <= 2 * ((2T-1)^{-r}/(2r) + (2T+1)^{-(r+1)})
    const double s = static_cast<double>(r) + 1.0;
    const double x = 2.0 * terms - 1.0;
    return 4.0 / pi * 2.0 * (std::pow(x, 1.0 - s) / (2.0 * (s - 1.0)) + std::pow(x, -s));
}

double kolmogorov_bound(double M0, double Mr, int k, int r) {
    if (!(0 < k && k < r) || r > max_order)
        throw BadOrderPair("need 0 < k < r <= 16");
    if (!(M0 > 0.0) || !(Mr > 0.0))
        throw std::invalid_argument("norm targets must be positive");
    const double kr = static_cast<double>(k) / static_cast<double>(r);
    return favard(r - k) / std::pow(favard(r), 1.0 - kr) * std::pow(M0, 1.0 - kr) * std::pow(Mr, kr);
}

ConditionCheck condition_a(double Mk, double Mrm2, double Mr, int k, int r) {
    if (!(0 < k && k < r - 2) || r > max_order)
        throw BadOrderPair("need 0 < k < r-2 and r <= 16");
    if (!(Mk > 0.0) || !(Mrm2 > 0.0) || !(Mr > 0.0))
        throw std::invalid_argument("norm targets must be positive");
    const double e = 1.0 / static_cast<double>(r - k);
    const double bound = favard(2) / std::pow(favard(r - k), 2.0 * e)
                       * std::pow(Mk, 2.0 * e)
                       * std::pow(Mr, static_cast<double>(r - k - 2) * e);
    const double margin = bound - Mrm2;
    return ConditionCheck{
        margin >= -tol::feas_rel * (1.0 + bound),
        margin,
        bound,
        margin / bound,
    };
}

} // namespace kolmo
