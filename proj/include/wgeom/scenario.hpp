#pragma once

#include <string>

#include "wgeom/comparison.hpp"
#include "wgeom/extrinsic.hpp"

#include "json.hpp"

namespace wgeom {

// Scenario files are JSON documents with sections:
//   model:      { m, w: <expr or {space_form: b}>, f: <expr, optional>,
//                 w_asym: {kind, exponent} (optional, for parsed warpings) }
//   comparison: { w, theta, q, rho0 } (whatever the action needs)
//   submanifold:{ n, psi, phiH, rho, sense: "upper"|"lower" }
//   action / output fields are read by the CLI.

WarpingFunction load_warping(const nlohmann::json& spec);
WeightedModelSpace load_model(const nlohmann::json& spec);
IntrinsicScenario load_intrinsic_scenario(const nlohmann::json& doc);
SubmanifoldProfile load_submanifold(const nlohmann::json& spec);

TheoremId theorem_from_string(const std::string& name);

}  // namespace wgeom
