#pragma once

#include <limits>
#include <optional>
#include <string>

#include "wgeom/expr.hpp"
#include "wgeom/quadrature.hpp"

namespace wgeom {

// Declared leading behavior of a profile as r -> inf. `kind` selects the
// comparison scale (r^a, e^{a r} or e^{a r^2}) and `exponent` is a.
struct AsymptoticOrder {
  enum class Kind { Polynomial, Exponential, GaussianExponential };
  Kind kind = Kind::Polynomial;
  double exponent = 0.0;
};

LogAsymptotics to_log_asymptotics(const AsymptoticOrder& a);

// A radial function of r >= 0 stored as an expression tree. Evaluation
// yields exact first and second derivatives through forward-mode dual
// numbers. Immutable after construction.
class RadialProfile {
 public:
  RadialProfile() = default;
  explicit RadialProfile(NodePtr expr,
                         std::optional<AsymptoticOrder> asym = std::nullopt)
      : expr_(std::move(expr)), asym_(asym) {}

  double operator()(double r) const { return eval(r, 0); }
  double eval(double r, int order) const;
  Dual2 jet(double r) const { return eval_jet(expr_, r); }

  std::string text() const { return to_string(expr_); }
  const NodePtr& expr() const { return expr_; }
  const std::optional<AsymptoticOrder>& asym() const { return asym_; }

  RadialProfile with_asym(AsymptoticOrder a) const {
    return RadialProfile(expr_, a);
  }

  bool valid() const { return expr_ != nullptr; }

 private:
  NodePtr expr_;
  std::optional<AsymptoticOrder> asym_;
};

RadialProfile parse_profile(const std::string& text);

// Profile that evaluates to the integral of `integrand` from `anchor` to r;
// derivatives delegate to the integrand exactly.
RadialProfile antiderivative_profile(const RadialProfile& integrand,
                                     double anchor);

// expr - expr(at), anchoring the profile to vanish at `at`.
RadialProfile shift_to_zero(const RadialProfile& p, double at);

RadialProfile constant_profile(double value);
RadialProfile negate(const RadialProfile& p);
RadialProfile add(const RadialProfile& a, const RadialProfile& b);
RadialProfile scale(const RadialProfile& p, double c);

// A warping function: w(0) = 0, w'(0) = 1 (checked to 1e-12) and w > 0 on a
// 512-point log-spaced validation grid over (1e-8, 100) clipped to the
// declared domain.
class WarpingFunction {
 public:
  explicit WarpingFunction(RadialProfile profile,
                           double domain_sup = std::numeric_limits<double>::infinity());

  const RadialProfile& profile() const { return profile_; }
  double domain_sup() const { return domain_sup_; }

  double operator()(double r) const { return profile_.eval(r, 0); }
  double eval(double r, int order) const { return profile_.eval(r, order); }
  Dual2 jet(double r) const { return profile_.jet(r); }

 private:
  RadialProfile profile_;
  double domain_sup_;
};

// Space-form warping w_b: sin(sqrt(b) r)/sqrt(b) for b > 0, r for b = 0,
// sinh(sqrt(-b) r)/sqrt(-b) for b < 0. For b > 0 the domain is [0, pi/sqrt(b)].
WarpingFunction space_form_warping(double b);

// Leading log-asymptotics of the primitive f(r) = int_anchor^r theta, probed
// from exact derivatives of theta at two large radii:
//   f(r) ~ quad*r^2 + lin*r + logcoef*log(r).
// Returns nullopt when the probes disagree (non-polynomial-like growth that
// has not settled), in which case callers fall back to heuristics.
std::optional<LogAsymptotics> probe_primitive_asymptotics(
    const RadialProfile& theta);

// Same probe applied to an additive profile f directly (the primitive is
// implicit: f' and f'' take the roles of theta and theta').
std::optional<LogAsymptotics> probe_additive_asymptotics(
    const RadialProfile& f);

}  // namespace wgeom
