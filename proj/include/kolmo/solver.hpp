#pragma once

#include "kolmo/euler.hpp"
#include "kolmo/ppoly.hpp"

#include <array>
#include <optional>

namespace kolmo {

/// The four-norm problem: find x with ||x^(s)|| = M_s at s in {0, k2, r-2, r}.
struct ProblemInstance {
    int r = 0;
    int k2 = 0;
    double M0 = 0.0;
    double Mk2 = 0.0;
    double Mrm2 = 0.0;
    double Mr = 0.0;

    /// Throws BadOrderPair / std::invalid_argument on violated constraints
    /// (r >= 4, 0 < k2 < r-2, all norms positive).
    void validate() const;
};

/// Parameters of the comparison function Psi(t) = b * psi_r(a; lambda*t)
/// matching three prescribed derivative norms.
struct SolvedParameters {
    double a = 0.0;
    double b = 0.0;
    double lambda = 0.0;
    /// ||Psi|| = b * N_r(a).
    double psi_norm_value = 0.0;
};

/// Verdict for one problem instance. `psi_cap` is ||Psi_r(M_k2, M_{r-2}, M_r)||
/// when condition a) holds; when it fails, psi_cap is still reported with the
/// plateau clamped to a = 0 for diagnostic value.
struct FeasibilityReport {
    ProblemInstance instance;
    ConditionCheck condition_a{};
    ConditionCheck condition_b{};
    bool feasible = false;
    std::optional<SolvedParameters> params;
    std::optional<PeriodicPiecewisePoly> extremal;
    double psi_cap = 0.0;
    bool psi_cap_clamped = false; // true when computed with a forced to 0
};

/// Solve for (a, b, lambda): lambda = sqrt(Mr / (2*Mrm2)), b = Mr / lambda^r,
/// and a is the unique root of g(a) = b * lambda^k * N_{r-k}(a) - Mk, found by
/// doubling the bracket from [0, 1] and bisecting to |da| <= 1e-12 * (1 + a).
/// Throws InfeasibleTriple when the three-norm inequality fails.
SolvedParameters solve_parameters(double Mk, double Mrm2, double Mr, int k, int r);

/// ||Psi_r(M_k, M_{r-2}, M_r)|| = b * N_r(a) for the solved parameters.
double psi_cap(double Mk, double Mrm2, double Mr, int k, int r);

/// Full feasibility decision. Infeasibility is a report, not an error; the
/// extremal function x(t) = Psi(t) + M0 - ||Psi|| is attached when feasible.
FeasibilityReport decide(const ProblemInstance& inst);

/// Re-measured norms (||x||, ||x^(k2)||, ||x^(r-2)||, ||x^(r)||) of the
/// extremal function, via repeated differentiation and sup_norm.
/// Throws NotFeasible unless report.feasible.
std::array<double, 4> extremal_norms(const FeasibilityReport& report);

} // namespace kolmo
