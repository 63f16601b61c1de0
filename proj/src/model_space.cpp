#include "wgeom/model_space.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wgeom {

namespace {

RadialProfile anchored(RadialProfile f) {
  if (!f.valid()) return constant_profile(0.0);
  const double at0 = f.eval(0.0, 0);
  if (std::abs(at0) <= 1e-12) return f;
  return shift_to_zero(f, 0.0);
}

}  // namespace

WeightedModelSpace::WeightedModelSpace(int m, WarpingFunction w,
                                       RadialProfile f)
    : m_(m), w_(std::move(w)), f_(anchored(std::move(f))) {
  if (m_ < 2) throw std::invalid_argument("dimension must be at least 2");
}

WeightedModelSpace::WeightedModelSpace(int m, WarpingFunction w)
    : WeightedModelSpace(m, std::move(w), constant_profile(0.0)) {}

double WeightedModelSpace::area_density(double r) const {
  return std::pow(w_(r), m_ - 1) * std::exp(f_(r));
}

double WeightedModelSpace::cap_density(double r) const {
  return std::pow(w_(r), 1 - m_) * std::exp(-f_(r));
}

const std::optional<LogAsymptotics>& WeightedModelSpace::f_primitive_asym()
    const {
  if (!f_asym_cache_) f_asym_cache_ = probe_additive_asymptotics(f_);
  return *f_asym_cache_;
}

std::optional<LogAsymptotics> WeightedModelSpace::density_asymptotics(
    double p, double s) const {
  if (!w_.profile().asym()) return std::nullopt;
  const auto& fa = f_primitive_asym();
  if (!fa) return std::nullopt;
  LogAsymptotics wa = to_log_asymptotics(*w_.profile().asym());
  LogAsymptotics out;
  out.quad = p * wa.quad + s * fa->quad;
  out.lin = p * wa.lin + s * fa->lin;
  out.logcoef = p * wa.logcoef + s * fa->logcoef;
  return out;
}

double unit_sphere_volume(int m) {
  if (m < 2) throw std::invalid_argument("dimension must be at least 2");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * m) / std::tgamma(0.5 * m);
}

double volume_ball(const WeightedModelSpace& S, double R) {
  if (!(R > 0.0 && R < S.domain_sup()))
    throw std::invalid_argument("radius outside domain");
  const double v = unit_sphere_volume(S.dim()) *
                   integrate([&](double t) { return S.area_density(t); }, 0.0, R);
  return v;
}

double area_sphere(const WeightedModelSpace& S, double R) {
  if (!(R > 0.0 && R < S.domain_sup()))
    throw std::invalid_argument("radius outside domain");
  return unit_sphere_volume(S.dim()) * S.area_density(R);
}

double iso_quotient(const WeightedModelSpace& S, double R) {
  if (R == 0.0) return 0.0;
  if (!(R > 0.0 && R < S.domain_sup()))
    throw std::invalid_argument("radius outside domain");
  if (R < kOriginEps) {
    // Removable singularity: q(R) = R/m + O(R^2).
    return R / S.dim();
  }
  return volume_ball(S, R) / area_sphere(S, R);
}

double sphere_mean_curvature(const WeightedModelSpace& S, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  if (r < kOriginEps) {
    // w(r) = r + w''(0)/2 r^2 + ..., so w'/w = 1/r + w''(0)/2 + O(r).
    const Dual2 j0 = S.warping().jet(0.0);
    return 1.0 / r + 0.5 * j0.d2;
  }
  const Dual2 j = S.warping().jet(r);
  return j.d1 / j.v;
}

double radial_sec(const WeightedModelSpace& S, double r) {
  const Dual2 j = S.warping().jet(r);
  return -j.d2 / j.v;
}

double radial_ric(const WeightedModelSpace& S, double r) {
  return (S.dim() - 1) * radial_sec(S, r);
}

double radial_ric_h(const WeightedModelSpace& S, double r, double q) {
  const Dual2 f = S.weight().jet(r);
  double v = radial_ric(S, r) - f.d2;
  if (std::isfinite(q)) {
    if (!(q > 0.0)) throw std::invalid_argument("q must be positive");
    v -= f.d1 * f.d1 / q;
  }
  return v;
}

double radial_sec_h(const WeightedModelSpace& S, double r, double q) {
  const Dual2 f = S.weight().jet(r);
  const int m = S.dim();
  double v = radial_sec(S, r) - f.d2 / (m - 1);
  if (std::isfinite(q)) {
    if (!(q > 0.0)) throw std::invalid_argument("q must be positive");
    v -= f.d1 * f.d1 / ((m - 1) * q);
  }
  return v;
}

double laplacian_distance(const WeightedModelSpace& S, double r) {
  return (S.dim() - 1) * sphere_mean_curvature(S, r) + S.weight().eval(r, 1);
}

double hessian_distance(const WeightedModelSpace& S, double r) {
  return sphere_mean_curvature(S, r);
}

}  // namespace wgeom
