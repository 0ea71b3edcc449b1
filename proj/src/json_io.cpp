#include "kolmo/json_io.hpp"

namespace kolmo {

nlohmann::json to_json(const PeriodicPiecewisePoly& p) {
    return nlohmann::json{
        {"period", p.period()},
        {"breakpoints", p.breakpoints()},
        {"pieces", p.pieces()},
        {"smoothness", p.smoothness()},
    };
}

PeriodicPiecewisePoly ppoly_from_json(const nlohmann::json& j) {
    return PeriodicPiecewisePoly(
        j.at("period").get<double>(),
        j.at("breakpoints").get<std::vector<double>>(),
        j.at("pieces").get<std::vector<std::vector<double>>>(),
        j.at("smoothness").get<int>());
}

nlohmann::json to_json(const PsiSpline& s) {
    return nlohmann::json{
        {"a", s.a()},
        {"r", s.order()},
        {"f", to_json(s.poly())},
    };
}

nlohmann::json to_json(const ConditionCheck& c) {
    return nlohmann::json{
        {"holds", c.holds},
        {"margin", c.margin},
        {"bound", c.bound},
        {"margin_rel", c.margin_rel},
    };
}

nlohmann::json to_json(const SolvedParameters& p) {
    return nlohmann::json{
        {"a", p.a},
        {"b", p.b},
        {"lambda", p.lambda},
        {"psi_norm_value", p.psi_norm_value},
    };
}

nlohmann::json to_json(const VerificationReport& r) {
    return nlohmann::json{
        {"hypothesis_met", r.hypothesis_met},
        {"ok", r.ok},
        {"worst_violation", r.worst_violation},
        {"config",
         {{"grid_points", r.config.grid_points},
          {"fd_step", r.config.fd_step},
          {"fd_order", r.config.fd_order}}},
    };
}

nlohmann::json to_json(const FeasibilityReport& r) {
    nlohmann::json j{
        {"feasible", r.feasible},
        {"condition_a", to_json(r.condition_a)},
        {"condition_b", to_json(r.condition_b)},
        {"psi_cap", r.psi_cap},
        {"psi_cap_clamped", r.psi_cap_clamped},
    };
    j["params"] = r.params ? to_json(*r.params) : nlohmann::json(nullptr);
    return j;
}

} // namespace kolmo
