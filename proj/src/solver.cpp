#include "kolmo/solver.hpp"

#include "kolmo/errors.hpp"
#include "kolmo/psi.hpp"

#include <cmath>
#include <stdexcept>

namespace kolmo {

namespace {

struct ScaleFactors {
    double lambda;
    double b;
};

ScaleFactors scale_factors(double Mrm2, double Mr, int r) {
    const double lambda = std::sqrt(Mr / (2.0 * Mrm2));
    return {lambda, Mr / std::pow(lambda, r)};
}

} // namespace

void ProblemInstance::validate() const {
    if (r < 4 || r > max_order)
        throw BadOrderPair("order r must be in [4, 16]");
    if (!(0 < k2 && k2 < r - 2))
        throw BadOrderPair("need 0 < k2 < r-2");
    if (!(M0 > 0.0) || !(Mk2 > 0.0) || !(Mrm2 > 0.0) || !(Mr > 0.0))
        throw std::invalid_argument("all four norm targets must be positive");
}

SolvedParameters solve_parameters(double Mk, double Mrm2, double Mr, int k, int r) {
    const ConditionCheck cond = condition_a(Mk, Mrm2, Mr, k, r);
    if (!cond.holds)
        throw InfeasibleTriple("three-norm inequality fails; no plateau parameter exists");

    const auto [lambda, b] = scale_factors(Mrm2, Mr, r);
    const double amp = b * std::pow(lambda, k);
    const auto g = [&](double a) { return amp * psi_norm(a, r - k) - Mk; };

    const double g0 = g(0.0);
    double a = 0.0;
    if (g0 >= -tol::feas_rel * (1.0 + Mk)) {
        // boundary of the inequality: the plateau degenerates
        a = 0.0;
    } else {
        double hi = 1.0;
        double ghi = g(hi);
        while (ghi < 0.0) {
            hi *= 2.0;
            if (hi > 1e9)
                throw std::logic_error("plateau bracket diverged; norm not increasing");
            ghi = g(hi);
        }
        double lo = hi > 1.0 ? hi / 2.0 : 0.0;
        double glo = g(lo);
        if (glo > 0.0)
            throw std::logic_error("non-monotone norm sample while bracketing");
        for (int it = 0; it < 200 && hi - lo > 1e-12 * (1.0 + lo); ++it) {
            const double mid = 0.5 * (lo + hi);
            const double gm = g(mid);
            if (gm < 0.0) {
                if (gm < glo - 1e-9 * (1.0 + Mk))
                    throw std::logic_error("non-monotone norm sample during bisection");
                lo = mid;
                glo = gm;
            } else {
                hi = mid;
            }
        }
        a = 0.5 * (lo + hi);
    }

    SolvedParameters out;
    out.a = a;
    out.b = b;
    out.lambda = lambda;
    out.psi_norm_value = b * PsiSpline(a, r).norm(0);
    return out;
}

double psi_cap(double Mk, double Mrm2, double Mr, int k, int r) {
    return solve_parameters(Mk, Mrm2, Mr, k, r).psi_norm_value;
}

FeasibilityReport decide(const ProblemInstance& inst) {
    inst.validate();
    FeasibilityReport rep;
    rep.instance = inst;
    rep.condition_a = condition_a(inst.Mk2, inst.Mrm2, inst.Mr, inst.k2, inst.r);

    std::optional<PsiSpline> spline;
    if (rep.condition_a.holds) {
        rep.params = solve_parameters(inst.Mk2, inst.Mrm2, inst.Mr, inst.k2, inst.r);
        rep.psi_cap = rep.params->psi_norm_value;
        spline.emplace(rep.params->a, inst.r);
    } else {
        // diagnostic cap with the plateau clamped to its minimum
        const auto [lambda, b] = scale_factors(inst.Mrm2, inst.Mr, inst.r);
        rep.psi_cap = b * PsiSpline(0.0, inst.r).norm(0);
        rep.psi_cap_clamped = true;
    }

    const double margin_b = inst.M0 - rep.psi_cap;
    rep.condition_b = ConditionCheck{
        margin_b >= -tol::feas_rel * (1.0 + rep.psi_cap),
        margin_b,
        rep.psi_cap,
        margin_b / rep.psi_cap,
    };

    rep.feasible = rep.condition_a.holds && rep.condition_b.holds;
    if (rep.feasible) {
        const PeriodicPiecewisePoly big =
            spline->poly().scale(rep.params->b, rep.params->lambda);
        rep.extremal = big.add_constant(inst.M0 - rep.psi_cap);
    }
    return rep;
}

std::array<double, 4> extremal_norms(const FeasibilityReport& report) {
    if (!report.feasible || !report.extremal)
        throw NotFeasible("extremal norms are defined only for feasible instances");
    const ProblemInstance& inst = report.instance;
    std::array<double, 4> out{};
    PeriodicPiecewisePoly cur = *report.extremal;
    int order = 0;
    const std::array<int, 4> wanted = {0, inst.k2, inst.r - 2, inst.r};
    for (std::size_t i = 0; i < wanted.size(); ++i) {
        while (order < wanted[i]) {
            cur = cur.derivative();
            ++order;
        }
        out[i] = cur.sup_norm();
    }
    return out;
}

} // namespace kolmo
