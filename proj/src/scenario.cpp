#include "wgeom/scenario.hpp"

#include <stdexcept>

namespace wgeom {

namespace {

using nlohmann::json;

AsymptoticOrder parse_asym(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  AsymptoticOrder a;
  if (kind == "polynomial")
    a.kind = AsymptoticOrder::Kind::Polynomial;
  else if (kind == "exponential")
    a.kind = AsymptoticOrder::Kind::Exponential;
  else if (kind == "gaussian")
    a.kind = AsymptoticOrder::Kind::GaussianExponential;
  else
    throw std::invalid_argument("unknown asymptotic kind: " + kind);
  a.exponent = j.at("exponent").get<double>();
  return a;
}

}  // namespace

// `section` is the enclosing object: the warping lives under "w" (either an
// expression string or {"space_form": b}); an optional sibling "w_asym"
// declares the growth class of a parsed expression.
WarpingFunction load_warping(const json& section) {
  const json& w = section.at("w");
  if (w.is_object()) {
    if (!w.contains("space_form"))
      throw std::invalid_argument("warping object must carry space_form");
    return space_form_warping(w.at("space_form").get<double>());
  }
  if (!w.is_string())
    throw std::invalid_argument("warping must be an expression or space_form");
  RadialProfile p = parse_profile(w.get<std::string>());
  if (section.contains("w_asym"))
    p = p.with_asym(parse_asym(section.at("w_asym")));
  return WarpingFunction(std::move(p));
}

WeightedModelSpace load_model(const json& section) {
  const int m = section.at("m").get<int>();
  WarpingFunction w = load_warping(section);
  if (section.contains("f") && !section.at("f").is_null()) {
    RadialProfile f = parse_profile(section.at("f").get<std::string>());
    return WeightedModelSpace(m, std::move(w), std::move(f));
  }
  return WeightedModelSpace(m, std::move(w));
}

IntrinsicScenario load_intrinsic_scenario(const json& doc) {
  const json& model = doc.at("model");
  const json& comp = doc.at("comparison");
  IntrinsicScenario sc{load_model(model), load_warping(comp),
                       std::nullopt, std::nullopt, 0.0, {}};
  if (comp.contains("theta") && !comp.at("theta").is_null())
    sc.theta = parse_profile(comp.at("theta").get<std::string>());
  if (comp.contains("q") && !comp.at("q").is_null())
    sc.q = comp.at("q").get<double>();
  if (comp.contains("rho0")) sc.rho0 = comp.at("rho0").get<double>();

  if (doc.contains("action")) {
    const json& act = doc.at("action");
    if (act.contains("radii")) {
      for (const auto& r : act.at("radii")) sc.radii.push_back(r.get<double>());
    } else if (act.contains("grid")) {
      sc.radii = default_radii(0.05, 10.0, act.at("grid").get<int>());
    }
  }
  if (sc.radii.empty()) sc.radii = default_radii();
  return sc;
}

SubmanifoldProfile load_submanifold(const json& section) {
  SubmanifoldProfile prof;
  prof.n = section.at("n").get<int>();
  prof.psi = parse_profile(section.at("psi").get<std::string>());
  prof.phiH = section.contains("phiH")
                  ? parse_profile(section.at("phiH").get<std::string>())
                  : constant_profile(0.0);
  if (section.contains("rho")) prof.rho = section.at("rho").get<double>();
  if (section.contains("sense")) {
    const std::string s = section.at("sense").get<std::string>();
    if (s == "upper")
      prof.sense = BoundSense::Upper;
    else if (s == "lower")
      prof.sense = BoundSense::Lower;
    else
      throw std::invalid_argument("sense must be \"upper\" or \"lower\"");
  }
  return prof;
}

TheoremId theorem_from_string(const std::string& name) {
  static const std::pair<const char*, TheoremId> table[] = {
      {"isoperimetry-inf", TheoremId::IsoperimetryInfty},
      {"capacity-inf", TheoremId::CapacityInfty},
      {"volume-ricci", TheoremId::VolumeRicci},
      {"volume-sec", TheoremId::VolumeSec},
      {"parabolicity-ricci", TheoremId::ParabolicityRicci},
      {"hyperbolicity-sec", TheoremId::HyperbolicitySec},
      {"isoperimetry-q", TheoremId::IsoperimetryQ},
      {"capacity-q", TheoremId::CapacityQ},
      {"capacity-riemannian", TheoremId::CapacityRiemannian},
  };
  for (const auto& [key, id] : table)
    if (name == key) return id;
  throw std::invalid_argument("unknown theorem name: " + name);
}

}  // namespace wgeom
