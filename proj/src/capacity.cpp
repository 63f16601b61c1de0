#include "wgeom/capacity.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace wgeom {

namespace {

ParabolicityVerdict verdict_from(const IntegralVerdict& iv, int m,
                                 double rho) {
  ParabolicityVerdict out;
  out.evidence = iv;
  out.rho_used = rho;
  switch (iv.status) {
    case IntegralVerdict::Status::Diverges:
      out.status = ParabolicityVerdict::Status::Parabolic;
      out.capacity = 0.0;
      break;
    case IntegralVerdict::Status::Converges:
      out.status = ParabolicityVerdict::Status::Hyperbolic;
      out.capacity = unit_sphere_volume(m) / iv.value;
      break;
    case IntegralVerdict::Status::Inconclusive:
      out.status = ParabolicityVerdict::Status::Inconclusive;
      break;
  }
  return out;
}

}  // namespace

CapacityResult potential(const WeightedModelSpace& S, double rho, double R) {
  if (!(0.0 < rho && rho < R && R < S.domain_sup()))
    throw std::invalid_argument("need 0 < rho < R inside the domain");
  auto g = [S](double t) { return S.cap_density(t); };
  const double denom = integrate_rel(g, rho, R);
  CapacityResult out;
  out.denominator = denom;
  out.value = unit_sphere_volume(S.dim()) / denom;
  out.rho = rho;
  out.R = R;
  out.potential = [g, denom, rho, R](double r) {
    if (r <= rho) return 1.0;
    if (r >= R) return 0.0;
    const double v = integrate_rel(g, r, R) / denom;
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
  };
  return out;
}

ParabolicityVerdict capacity_at_infinity(const WeightedModelSpace& S,
                                         double rho) {
  if (!S.unbounded())
    throw std::invalid_argument("capacity at infinity needs an unbounded domain");
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  auto g = [S](double t) { return S.cap_density(t); };
  const auto meta = S.density_asymptotics(1 - S.dim(), -1.0);
  ParabolicityVerdict out =
      verdict_from(classify_improper(g, rho, meta), S.dim(), rho);
  if (out.hyperbolic()) {
    // Refine the tail integral to relative precision.
    out.capacity = unit_sphere_volume(S.dim()) / integrate_tail(g, rho);
  }
  return out;
}

ParabolicityVerdict classify_parabolicity(const WeightedModelSpace& S,
                                          double rho) {
  return capacity_at_infinity(S, rho);
}

std::function<double(double)> exit_time_transplant(const WeightedModelSpace& S,
                                                   double R) {
  if (!(R > 0.0 && R < S.domain_sup()))
    throw std::invalid_argument("radius outside domain");
  auto q = std::make_shared<std::function<double(double)>>(
      [S](double t) { return iso_quotient(S, t); });
  return [q, R](double s) {
    if (s >= R) return 0.0;
    if (s < 0.0) s = 0.0;
    return integrate_rel([&](double t) { return (*q)(t); }, s, R, 1e-11);
  };
}

GeneralizedPotentialResult generalized_potential(const WarpingFunction& w,
                                                 double eff_dim,
                                                 const RadialProfile& drift,
                                                 double rho, double R) {
  if (!(0.0 < rho && rho < R))
    throw std::invalid_argument("need 0 < rho < R");
  if (!(eff_dim > 1.0))
    throw std::invalid_argument("effective dimension must exceed 1");
  RadialProfile ftilde = antiderivative_profile(drift, rho);
  auto g = [w, eff_dim, ftilde](double t) {
    return std::pow(w(t), 1.0 - eff_dim) * std::exp(-ftilde(t));
  };
  GeneralizedPotentialResult out;
  out.denominator = integrate_rel(g, rho, R);
  out.flux = g(rho) / out.denominator;
  const double denom = out.denominator;
  out.potential = [g, denom, rho, R](double s) {
    if (s <= rho) return 1.0;
    if (s >= R) return 0.0;
    const double v = integrate_rel(g, s, R) / denom;
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
  };
  out.tail = generalized_tail(w, eff_dim, drift, rho);
  return out;
}

IntegralVerdict generalized_tail(const WarpingFunction& w, double eff_dim,
                                 const RadialProfile& drift, double rho) {
  RadialProfile ftilde = antiderivative_profile(drift, rho);
  auto g = [w, eff_dim, ftilde](double t) {
    return std::pow(w(t), 1.0 - eff_dim) * std::exp(-ftilde(t));
  };
  std::optional<LogAsymptotics> meta;
  if (w.profile().asym()) {
    if (auto da = probe_primitive_asymptotics(drift)) {
      LogAsymptotics wa = to_log_asymptotics(*w.profile().asym());
      meta = LogAsymptotics{(1.0 - eff_dim) * wa.quad - da->quad,
                            (1.0 - eff_dim) * wa.lin - da->lin,
                            (1.0 - eff_dim) * wa.logcoef - da->logcoef};
    }
  }
  return classify_improper(g, rho, meta);
}

}  // namespace wgeom
