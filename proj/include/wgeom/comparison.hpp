#pragma once

#include <vector>

#include "wgeom/capacity.hpp"

namespace wgeom {

// The nine intrinsic comparison statements, in the order they are verified.
enum class TheoremId {
  IsoperimetryInfty,    // iso quotient / volume bounds, Ric_inf lower bound
  CapacityInfty,        // capacity ratio bound + parabolicity, Ric_inf
  VolumeRicci,          // iso quotient / volume bounds, plain Ric lower bound
  VolumeSec,            // reversed bounds, Sec upper bound
  ParabolicityRicci,    // capacity ratio past rho0, Ric lower bound
  HyperbolicitySec,     // reversed capacity ratio past rho0, Sec upper bound
  IsoperimetryQ,        // iso quotient vs pure-power profile, Ric_q
  CapacityQ,            // capacity ratio vs pure-power profile, Ric_q
  CapacityRiemannian,   // unweighted capacity via drifted radial operator
};

const char* theorem_name(TheoremId id);

// A concrete weighted model space playing the ambient manifold (its radial
// weight is the h of the statements), tested against a comparison warping
// with optional drift bound theta and Bakry-Emery parameter q.
struct IntrinsicScenario {
  WeightedModelSpace ambient;
  WarpingFunction comp_w;
  std::optional<RadialProfile> theta;
  std::optional<double> q;
  double rho0 = 0.0;
  std::vector<double> radii;
};

// 64 log-spaced radii in [lo, hi].
std::vector<double> default_radii(double lo = 0.05, double hi = 10.0,
                                  int n = 64);

struct ComparisonReport {
  enum class Verdict { Pass, HypothesisFail, InequalityViolation, Inconclusive };
  TheoremId theorem = TheoremId::IsoperimetryInfty;
  Verdict verdict = Verdict::Pass;
  std::vector<double> radii;
  // min over the theorem's hypothesis clauses at each radius; >= -tol passes
  std::vector<double> hypothesis_margins;
  // relative inequality margin at each radius; >= -tol passes
  std::vector<double> inequality_margins;
  double fail_radius = 0.0;
  double fail_margin = 0.0;
  bool theta_clause_weighted = false;  // theta checked in w'-weighted form
  double hypothesis_tol = 0.0;
  double inequality_tol = 0.0;

  bool passed() const { return verdict == Verdict::Pass; }
};

inline constexpr double kHypTol = 1e-9;
inline constexpr double kIneqTol = 1e-9;

enum class BoundVariant { Q, Infinity };

// Model value bounding the weighted Laplacian of the distance function.
double laplacian_bound(const IntrinsicScenario& sc, BoundVariant variant,
                       double r);
// Model value bounding Hess r (plus the weight correction for the q form).
double hessian_bound(const IntrinsicScenario& sc, BoundVariant variant,
                     double r);

std::vector<double> check_hypotheses(const IntrinsicScenario& sc,
                                     TheoremId id);

ComparisonReport verify_intrinsic(const IntrinsicScenario& sc, TheoremId id);

}  // namespace wgeom
