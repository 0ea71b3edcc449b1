#pragma once

#include "kolmo/ppoly.hpp"
#include "kolmo/psi.hpp"
#include "kolmo/solver.hpp"
#include "kolmo/verify.hpp"

#include <json.hpp>

namespace kolmo {

/// {"period": f, "breakpoints": [f], "pieces": [[f]], "smoothness": i}.
/// Round-trips binary64 values bit-exactly (shortest round-trip decimals).
nlohmann::json to_json(const PeriodicPiecewisePoly& p);
PeriodicPiecewisePoly ppoly_from_json(const nlohmann::json& j);

/// {"a": f, "r": i, "f": <ppoly>}.
nlohmann::json to_json(const PsiSpline& s);

nlohmann::json to_json(const ConditionCheck& c);
nlohmann::json to_json(const SolvedParameters& p);
nlohmann::json to_json(const FeasibilityReport& r);

/// {"hypothesis_met": bool, "ok": bool, "worst_violation": f, "config": {...}}.
nlohmann::json to_json(const VerificationReport& r);

} // namespace kolmo
