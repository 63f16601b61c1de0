#pragma once

#include <string>
#include <vector>

#include "wgeom/capacity.hpp"

namespace wgeom {

// Which sense the radial bounds psi (on <grad h, grad r>) and phi_H (on
// <H^h, grad r>) carry: Upper means they bound from above (the un-bracketed
// alternative of the extrinsic statements), Lower from below.
enum class BoundSense { Upper, Lower };

struct SubmanifoldProfile {
  int n = 2;             // submanifold dimension
  RadialProfile psi;     // bound for <grad h, grad r>
  RadialProfile phiH;    // bound for <H^h_P, grad r>
  double rho = 1.0;      // inner radius from which the bounds hold
  BoundSense sense = BoundSense::Upper;
};

// Totally geodesic radial sub-model: the induced space shares warping and
// weight with the ambient; the radial weight gradient is tangent, so the
// h-mean curvature vector vanishes and |grad_P r| = 1.
struct SubModel {
  WeightedModelSpace ambient;
  int n;
  WeightedModelSpace induced;
};

SubModel totally_geodesic_submodel(const WeightedModelSpace& ambient, int n);

// Residuals of the identity <n H_P, grad r> + <grad_P h, grad_P r> =
// <H^h_P, grad r> + <grad h, grad r> on the grid (both sides reduce to f').
std::vector<double> mean_curvature_relation_check(
    const SubModel& sub, const std::vector<double>& grid);

enum class ExtrinsicVariant { SecLower, SecUpper, QWeighted };

// Lower (resp. upper) bound for the weighted Laplacian of F(r) restricted to
// an n-submanifold; dh and dH are the pointwise values (or bounds) of
// <grad h, grad r> and <H^h_P, grad r>, grad_norm is |grad_P r|.
double extrinsic_laplacian_bound(const WarpingFunction& w, int m, int n,
                                 ExtrinsicVariant variant, double q,
                                 double Fp, double Fpp, double grad_norm,
                                 double dh, double dH, double r);

enum class BalanceKind { Simpson, SubParabolicity, SubQ };

// Per-radius balance-condition margins (>= 0 means satisfied in the sense
// carried by the profile). m and q are only consulted for SubQ.
std::vector<double> check_balance(BalanceKind kind,
                                  const SubmanifoldProfile& prof,
                                  const WarpingFunction& comp_w,
                                  const std::vector<double>& grid, int m = 0,
                                  double q = 0.0);

struct SimpsonReport {
  double lhs = 0.0;    // Vol_h(D_R)
  double rhs = 0.0;    // q_{w,f}(R) * flux integral
  double margin = 0.0; // relative, signed by the profile sense
  bool pass = false;
};

// Volume-vs-flux comparison on a totally geodesic sub-model, where both
// sides are computable and coincide.
SimpsonReport verify_simpson(const SubModel& sub, double R,
                             double tol = 1e-9);

enum class SubVariant { Sec, QWeighted };

struct SubClassification {
  ParabolicityVerdict verdict;
  double ratio_bound = 0.0;  // guaranteed Cap^f / Vol_f quotient
  std::vector<double> balance_margins;
  bool balance_ok = true;
};

// Tail-integral classification of a submanifold profile. Sec uses the
// n-dimensional comparison weight f = int_rho (psi + phi); QWeighted uses
// the exponent (1-n)(m+q-1)/(m-1) with f = int_rho ((m-n)/(m-1) psi + phi).
SubClassification classify_submanifold(const SubmanifoldProfile& prof,
                                       const WarpingFunction& comp_w,
                                       SubVariant variant, double q = 0.0,
                                       int m = 0,
                                       std::vector<double> grid = {});

struct CriterionResult {
  bool premises_ok = true;
  std::string failed_premise;
  double rho_used = 0.0;
  SubClassification classification;
};

// Bounded h-mean curvature criterion: checks the growth premises on w and
// psi, builds phi = +/- c, re-anchors rho until the balance condition holds
// and delegates to classify_submanifold.
CriterionResult check_bounded_mean_curvature_criterion(
    const SubmanifoldProfile& prof, const WarpingFunction& comp_w, double c);

// h-minimal hypersurface criterion (n = m-1, psi = h', phi = 0): premises
// are w non-increasing past rho and h <= 0; conclusion is parabolicity of
// the hypersurface via the q-weighted tail test.
CriterionResult check_h_minimal_hypersurface_criterion(
    const WarpingFunction& comp_w, const RadialProfile& h, int m, double q,
    double rho);

// The radial weight-gradient bound of the Cartan-Hadamard h-minimal
// criterion: psi = -(n-2-eps)/r for b = 0, and
// psi = -(n-1-eps) sqrt(-b) coth(sqrt(-b) r) for b < 0.
RadialProfile cartan_hadamard_psi(double b, int n, double eps);

}  // namespace wgeom
