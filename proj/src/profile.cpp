#include "wgeom/profile.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wgeom {

LogAsymptotics to_log_asymptotics(const AsymptoticOrder& a) {
  LogAsymptotics out;
  switch (a.kind) {
    case AsymptoticOrder::Kind::Polynomial: out.logcoef = a.exponent; break;
    case AsymptoticOrder::Kind::Exponential: out.lin = a.exponent; break;
    case AsymptoticOrder::Kind::GaussianExponential: out.quad = a.exponent; break;
  }
  return out;
}

double RadialProfile::eval(double r, int order) const {
  const Dual2 j = eval_jet(expr_, r);
  switch (order) {
    case 0: return j.v;
    case 1: return j.d1;
    case 2: return j.d2;
  }
  throw std::invalid_argument("derivative order must be 0, 1 or 2");
}

RadialProfile parse_profile(const std::string& text) {
  return RadialProfile(parse_expression(text));
}

RadialProfile antiderivative_profile(const RadialProfile& integrand,
                                     double anchor) {
  return RadialProfile(make_antiderivative(integrand.expr(), anchor));
}

RadialProfile shift_to_zero(const RadialProfile& p, double at) {
  const double v = p.eval(at, 0);
  if (v == 0.0) return p;
  return RadialProfile(make_binary('-', p.expr(), make_const(v)), p.asym());
}

RadialProfile constant_profile(double value) {
  return RadialProfile(make_const(value));
}

RadialProfile negate(const RadialProfile& p) {
  return RadialProfile(make_binary('-', make_const(0.0), p.expr()));
}

RadialProfile add(const RadialProfile& a, const RadialProfile& b) {
  return RadialProfile(make_binary('+', a.expr(), b.expr()));
}

RadialProfile scale(const RadialProfile& p, double c) {
  return RadialProfile(make_binary('*', make_const(c), p.expr()));
}

WarpingFunction::WarpingFunction(RadialProfile profile, double domain_sup)
    : profile_(std::move(profile)), domain_sup_(domain_sup) {
  if (!(domain_sup_ > 0.0))
    throw std::invalid_argument("warping domain must be positive");
  const Dual2 origin = profile_.jet(0.0);
  if (std::abs(origin.v) > 1e-12)
    throw std::invalid_argument("warping function must satisfy w(0) = 0");
  if (std::abs(origin.d1 - 1.0) > 1e-12)
    throw std::invalid_argument("warping function must satisfy w'(0) = 1");
  // Positivity guard on a log-spaced grid; checked, not proved.
  const double hi = std::min(domain_sup_, 100.0);
  const double lo = 1e-8;
  const int n = 512;
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    const double r = lo * std::exp(i * step);
    if (r >= domain_sup_) break;
    if (!(profile_.eval(r, 0) > 0.0))
      throw std::invalid_argument(
          "warping function must be positive on (0, domain), failed near r=" +
          std::to_string(r));
  }
}

WarpingFunction space_form_warping(double b) {
  if (b == 0.0) {
    RadialProfile p(make_var(),
                    AsymptoticOrder{AsymptoticOrder::Kind::Polynomial, 1.0});
    return WarpingFunction(std::move(p));
  }
  if (b < 0.0) {
    const double s = std::sqrt(-b);
    // sinh(s r)/s
    NodePtr e = make_binary(
        '/', make_call("sinh", make_binary('*', make_const(s), make_var())),
        make_const(s));
    RadialProfile p(std::move(e),
                    AsymptoticOrder{AsymptoticOrder::Kind::Exponential, s});
    return WarpingFunction(std::move(p));
  }
  const double s = std::sqrt(b);
  NodePtr e = make_binary(
      '/', make_call("sin", make_binary('*', make_const(s), make_var())),
      make_const(s));
  const double pi = 3.14159265358979323846;
  return WarpingFunction(RadialProfile(std::move(e)), pi / s);
}

namespace {

// Shared probe: given samples of g = f' and g' at two large radii, fit the
// model g(r) = 2A r + B + C/r exactly (four data, three unknowns) so that
// f(r) ~ A r^2 + B r + C log r. The spare datum is used as a consistency
// check; if the model does not reproduce it, the asymptotics have not
// settled and classification is refused.
std::optional<LogAsymptotics> probe_from_jets(double r1, double g1, double dg1,
                                              double r2, double g2,
                                              double dg2) {
  if (!std::isfinite(g1) || !std::isfinite(g2) || !std::isfinite(dg1) ||
      !std::isfinite(dg2))
    return std::nullopt;
  // g'(r) = 2A - C/r^2 at both radii determines A and C.
  const double C = (dg2 - dg1) / (1.0 / (r1 * r1) - 1.0 / (r2 * r2));
  const double A = 0.5 * (dg1 + C / (r1 * r1));
  const double B = g2 - 2.0 * A * r2 - C / r2;
  const double pred = 2.0 * A * r1 + B + C / r1;
  if (std::abs(pred - g1) > 1e-6 * std::max(1.0, std::abs(g1)))
    return std::nullopt;
  const double eps = 1e-9;
  LogAsymptotics out;
  out.quad = std::abs(A) > eps ? A : 0.0;
  out.lin = std::abs(B) > eps ? B : 0.0;
  out.logcoef = std::abs(C) > eps ? C : 0.0;
  return out;
}

}  // namespace

std::optional<LogAsymptotics> probe_primitive_asymptotics(
    const RadialProfile& theta) {
  const double r1 = 48.0, r2 = 64.0;
  try {
    const Dual2 t1 = theta.jet(r1);
    const Dual2 t2 = theta.jet(r2);
    return probe_from_jets(r1, t1.v, t1.d1, r2, t2.v, t2.d1);
  } catch (const EvalError&) {
    return std::nullopt;
  }
}

std::optional<LogAsymptotics> probe_additive_asymptotics(
    const RadialProfile& f) {
  const double r1 = 48.0, r2 = 64.0;
  try {
    const Dual2 j1 = f.jet(r1);
    const Dual2 j2 = f.jet(r2);
    return probe_from_jets(r1, j1.d1, j1.d2, r2, j2.d1, j2.d2);
  } catch (const EvalError&) {
    return std::nullopt;
  }
}

}  // namespace wgeom
