#include "wgeom/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wgeom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool needs_theta(TheoremId id) {
  switch (id) {
    case TheoremId::IsoperimetryQ:
    case TheoremId::CapacityQ:
      return false;
    default:
      return true;
  }
}

bool needs_q(TheoremId id) {
  return id == TheoremId::IsoperimetryQ || id == TheoremId::CapacityQ ||
         id == TheoremId::CapacityRiemannian;
}

bool is_capacity_theorem(TheoremId id) {
  switch (id) {
    case TheoremId::CapacityInfty:
    case TheoremId::ParabolicityRicci:
    case TheoremId::HyperbolicitySec:
    case TheoremId::CapacityQ:
    case TheoremId::CapacityRiemannian:
      return true;
    default:
      return false;
  }
}

void validate(const IntrinsicScenario& sc, TheoremId id) {
  if (needs_theta(id) && !sc.theta)
    throw std::invalid_argument("scenario is missing the drift bound theta");
  if (needs_q(id) && !sc.q)
    throw std::invalid_argument("scenario is missing the parameter q");
  if (sc.q && !(*sc.q > 0.0))
    throw std::invalid_argument("q must be positive");
  if (sc.radii.empty())
    throw std::invalid_argument("scenario has no test radii");
}

double comp_curv(const WarpingFunction& w, double r) {
  const Dual2 j = w.jet(r);
  return -j.d2 / j.v;  // radial sectional curvature of the comparison model
}

// Radii actually used: capacity statements only apply from rho0 outwards.
std::vector<double> effective_radii(const IntrinsicScenario& sc,
                                    TheoremId id) {
  double lo = 0.0;
  if (id == TheoremId::ParabolicityRicci ||
      id == TheoremId::HyperbolicitySec ||
      id == TheoremId::CapacityRiemannian)
    lo = sc.rho0;
  std::vector<double> out;
  for (double r : sc.radii)
    if (r >= lo && r > 0.0) out.push_back(r);
  if (out.empty())
    throw std::invalid_argument("no test radii at or beyond rho0");
  return out;
}

double rel_margin(double favored, double dominated) {
  const double scale =
      std::max({std::abs(favored), std::abs(dominated), 1.0});
  return (favored - dominated) / scale;
}

struct RatioSide {
  IntegralVerdict::Status status = IntegralVerdict::Status::Inconclusive;
  double ratio = 0.0;  // Cap / Area ratio; 0 in the parabolic case
};

double improper_value(const Integrand& g, double a) {
  return integrate_tail(g, a, 1e-12);
}

RatioSide ratio_side(const Integrand& g, double rho,
                     const std::optional<LogAsymptotics>& meta) {
  RatioSide out;
  if (meta) {
    if (meta->tail_diverges()) {
      out.status = IntegralVerdict::Status::Diverges;
      return out;
    }
    out.status = IntegralVerdict::Status::Converges;
    out.ratio = g(rho) / improper_value(g, rho);
    return out;
  }
  const IntegralVerdict v = classify_improper(g, rho, std::nullopt);
  out.status = v.status;
  if (v.converges()) out.ratio = g(rho) / improper_value(g, rho);
  return out;
}

// Ambient Cap^h(B_rho)/Vol_h(dB_rho), computed from the ambient density.
RatioSide ambient_ratio(const WeightedModelSpace& S, double rho) {
  auto g = [S](double t) { return S.cap_density(t); };
  return ratio_side(g, rho, S.density_asymptotics(1 - S.dim(), -1.0));
}

// Comparison-side ratio with effective dimension and drift anchored at rho;
// the ratio does not depend on the anchor.
RatioSide comparison_ratio(const WarpingFunction& w, double eff,
                           const RadialProfile& drift, double rho) {
  RadialProfile ftilde = antiderivative_profile(drift, rho);
  auto g = [w, eff, ftilde](double t) {
    return std::pow(w(t), 1.0 - eff) * std::exp(-ftilde(t));
  };
  std::optional<LogAsymptotics> meta;
  if (w.profile().asym()) {
    if (auto da = probe_primitive_asymptotics(drift)) {
      LogAsymptotics wa = to_log_asymptotics(*w.profile().asym());
      meta = LogAsymptotics{(1.0 - eff) * wa.quad - da->quad,
                            (1.0 - eff) * wa.lin - da->lin,
                            (1.0 - eff) * wa.logcoef - da->logcoef};
    }
  }
  return ratio_side(g, rho, meta);
}

}  // namespace

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::IsoperimetryInfty: return "isoperimetry-inf";
    case TheoremId::CapacityInfty: return "capacity-inf";
    case TheoremId::VolumeRicci: return "volume-ricci";
    case TheoremId::VolumeSec: return "volume-sec";
    case TheoremId::ParabolicityRicci: return "parabolicity-ricci";
    case TheoremId::HyperbolicitySec: return "hyperbolicity-sec";
    case TheoremId::IsoperimetryQ: return "isoperimetry-q";
    case TheoremId::CapacityQ: return "capacity-q";
    case TheoremId::CapacityRiemannian: return "capacity-riemannian";
  }
  return "unknown";
}

std::vector<double> default_radii(double lo, double hi, int n) {
  std::vector<double> out(n);
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) out[i] = lo * std::exp(i * step);
  out.back() = hi;
  return out;
}

double laplacian_bound(const IntrinsicScenario& sc, BoundVariant variant,
                       double r) {
  const Dual2 j = sc.comp_w.jet(r);
  const double eta = j.d1 / j.v;
  const int m = sc.ambient.dim();
  if (variant == BoundVariant::Q) {
    if (!sc.q) throw std::invalid_argument("q required for this bound");
    return (m + *sc.q - 1.0) * eta;
  }
  if (!sc.theta) throw std::invalid_argument("theta required for this bound");
  return (m - 1.0) * eta + (*sc.theta)(r);
}

double hessian_bound(const IntrinsicScenario& sc, BoundVariant variant,
                     double r) {
  const Dual2 j = sc.comp_w.jet(r);
  const double eta = j.d1 / j.v;
  const int m = sc.ambient.dim();
  if (variant == BoundVariant::Q) {
    if (!sc.q) throw std::invalid_argument("q required for this bound");
    return (m + *sc.q - 1.0) / (m - 1.0) * eta;
  }
  if (!sc.theta) throw std::invalid_argument("theta required for this bound");
  return eta + (*sc.theta)(r) / (m - 1.0);
}

std::vector<double> check_hypotheses(const IntrinsicScenario& sc,
                                     TheoremId id) {
  validate(sc, id);
  const auto radii = effective_radii(sc, id);
  const int m = sc.ambient.dim();
  std::vector<double> margins;
  margins.reserve(radii.size());
  for (double r : radii) {
    const double b = comp_curv(sc.comp_w, r);
    double curv = 0.0;
    switch (id) {
      case TheoremId::IsoperimetryInfty:
      case TheoremId::CapacityInfty:
        curv = radial_ric_h(sc.ambient, r, kInf) - (m - 1.0) * b;
        break;
      case TheoremId::VolumeRicci:
      case TheoremId::ParabolicityRicci:
        curv = radial_ric(sc.ambient, r) - (m - 1.0) * b;
        break;
      case TheoremId::VolumeSec:
      case TheoremId::HyperbolicitySec:
        curv = b - radial_sec(sc.ambient, r);
        break;
      case TheoremId::IsoperimetryQ:
      case TheoremId::CapacityQ:
      case TheoremId::CapacityRiemannian:
        curv = radial_ric_h(sc.ambient, r, *sc.q) - (m + *sc.q - 1.0) * b;
        break;
    }
    double margin = curv;
    if (needs_theta(id)) {
      const double hprime = sc.ambient.weight().eval(r, 1);
      const double th = (*sc.theta)(r);
      double tm;
      switch (id) {
        case TheoremId::IsoperimetryInfty:
        case TheoremId::CapacityInfty: {
          // Printed in the w'-weighted form, and theta must be non-decreasing.
          const double wp = sc.comp_w.eval(r, 1);
          tm = std::min((th - hprime) * wp, sc.theta->eval(r, 1));
          break;
        }
        case TheoremId::VolumeRicci:
          tm = th - hprime;
          break;
        case TheoremId::VolumeSec:
        case TheoremId::HyperbolicitySec:
        case TheoremId::CapacityRiemannian:
          tm = hprime - th;
          break;
        case TheoremId::ParabolicityRicci:
          tm = th - hprime;
          break;
        default:
          tm = 0.0;
          break;
      }
      // The rho0-anchored statements only constrain the outer region.
      const bool outer_only = id == TheoremId::ParabolicityRicci ||
                              id == TheoremId::HyperbolicitySec ||
                              id == TheoremId::CapacityRiemannian;
      if (!(outer_only && r < sc.rho0)) margin = std::min(margin, tm);
    }
    margins.push_back(margin);
  }
  return margins;
}

ComparisonReport verify_intrinsic(const IntrinsicScenario& sc, TheoremId id) {
  validate(sc, id);
  ComparisonReport rep;
  rep.theorem = id;
  rep.radii = effective_radii(sc, id);
  rep.hypothesis_margins = check_hypotheses(sc, id);
  rep.hypothesis_tol = kHypTol;
  rep.inequality_tol = kIneqTol;
  rep.theta_clause_weighted = id == TheoremId::IsoperimetryInfty ||
                              id == TheoremId::CapacityInfty;
  // Hypothesis failure does not stop the run: the inequality margins are
  // still well-defined and are reported alongside the failed clause.
  for (size_t i = 0; i < rep.radii.size(); ++i) {
    if (rep.hypothesis_margins[i] < -kHypTol) {
      rep.verdict = ComparisonReport::Verdict::HypothesisFail;
      rep.fail_radius = rep.radii[i];
      rep.fail_margin = rep.hypothesis_margins[i];
      break;
    }
  }

  const int m = sc.ambient.dim();
  const bool cap_thm = is_capacity_theorem(id);

  // Comparison model for the volume statements: f integrates theta from 0.
  std::optional<WeightedModelSpace> comp;
  if (id == TheoremId::IsoperimetryInfty || id == TheoremId::VolumeRicci ||
      id == TheoremId::VolumeSec)
    comp.emplace(m, sc.comp_w, antiderivative_profile(*sc.theta, 0.0));

  rep.inequality_margins.reserve(rep.radii.size());
  for (double r : rep.radii) {
    double margin = 0.0;
    if (!cap_thm) {
      if (id == TheoremId::IsoperimetryQ) {
        const double eff = m + *sc.q;
        auto wp = [&](double t) { return std::pow(sc.comp_w(t), eff - 1.0); };
        const double rhs = integrate_rel(wp, 0.0, r) / wp(r);
        margin = rel_margin(iso_quotient(sc.ambient, r), rhs);
      } else {
        const double ql = iso_quotient(sc.ambient, r);
        const double qr = iso_quotient(*comp, r);
        const double vl = volume_ball(sc.ambient, r);
        const double vr = volume_ball(*comp, r);
        const double al = area_sphere(sc.ambient, r);
        const double ar = area_sphere(*comp, r);
        if (id == TheoremId::VolumeSec)
          margin = std::min({rel_margin(qr, ql), rel_margin(vl, vr),
                             rel_margin(al, ar)});
        else
          margin = std::min({rel_margin(ql, qr), rel_margin(vr, vl),
                             rel_margin(ar, al)});
      }
    } else {
      RatioSide lhs, rhs;
      switch (id) {
        case TheoremId::CapacityInfty:
        case TheoremId::ParabolicityRicci:
        case TheoremId::HyperbolicitySec:
          lhs = ambient_ratio(sc.ambient, r);
          rhs = comparison_ratio(sc.comp_w, m, *sc.theta, r);
          break;
        case TheoremId::CapacityQ:
          lhs = ambient_ratio(sc.ambient, r);
          rhs = comparison_ratio(sc.comp_w, m + *sc.q, constant_profile(0.0),
                                 r);
          break;
        case TheoremId::CapacityRiemannian: {
          WeightedModelSpace plain(m, sc.ambient.warping());
          lhs = ambient_ratio(plain, r);
          rhs = comparison_ratio(sc.comp_w, m + *sc.q, negate(*sc.theta), r);
          break;
        }
        default:
          break;
      }
      if (lhs.status == IntegralVerdict::Status::Inconclusive ||
          rhs.status == IntegralVerdict::Status::Inconclusive) {
        if (rep.verdict == ComparisonReport::Verdict::Pass)
          rep.verdict = ComparisonReport::Verdict::Inconclusive;
        rep.fail_radius = r;
        return rep;
      }
      margin = id == TheoremId::HyperbolicitySec
                   ? rel_margin(lhs.ratio, rhs.ratio)
                   : rel_margin(rhs.ratio, lhs.ratio);
    }
    rep.inequality_margins.push_back(margin);
    if (margin < -kIneqTol &&
        rep.verdict == ComparisonReport::Verdict::Pass) {
      rep.verdict = ComparisonReport::Verdict::InequalityViolation;
      rep.fail_radius = r;
      rep.fail_margin = margin;
    }
  }
  return rep;
}

}  // namespace wgeom
