#pragma once

#include <limits>

#include "wgeom/profile.hpp"

namespace wgeom {

// A rotationally symmetric space of dimension m with warping w and radial
// log-weight f. The weight is anchored so f(0) = 0; constructors shift any
// supplied profile accordingly.
class WeightedModelSpace {
 public:
  WeightedModelSpace(int m, WarpingFunction w, RadialProfile f);
  WeightedModelSpace(int m, WarpingFunction w);  // f = 0

  int dim() const { return m_; }
  const WarpingFunction& warping() const { return w_; }
  const RadialProfile& weight() const { return f_; }
  double domain_sup() const { return w_.domain_sup(); }
  bool unbounded() const {
    return domain_sup() == std::numeric_limits<double>::infinity();
  }

  // Density of the sphere-area measure at radius r: w^{m-1}(r) e^{f(r)}.
  double area_density(double r) const;
  // Reciprocal density w^{1-m}(r) e^{-f(r)}, the capacity integrand.
  double cap_density(double r) const;

  // Log-asymptotics of w^p e^{s f} as r -> inf, when derivable from the
  // warping's declared growth and the weight's probed primitive behavior.
  std::optional<LogAsymptotics> density_asymptotics(double p, double s) const;

 private:
  int m_;
  WarpingFunction w_;
  RadialProfile f_;
  mutable std::optional<std::optional<LogAsymptotics>> f_asym_cache_;
  const std::optional<LogAsymptotics>& f_primitive_asym() const;
};

double unit_sphere_volume(int m);

double volume_ball(const WeightedModelSpace& S, double R);
double area_sphere(const WeightedModelSpace& S, double R);
double iso_quotient(const WeightedModelSpace& S, double R);

double sphere_mean_curvature(const WeightedModelSpace& S, double r);
double radial_sec(const WeightedModelSpace& S, double r);
double radial_ric(const WeightedModelSpace& S, double r);

// q-weighted curvatures; pass q = infinity for the inf-weighted variant.
double radial_ric_h(const WeightedModelSpace& S, double r, double q);
double radial_sec_h(const WeightedModelSpace& S, double r, double q);

double laplacian_distance(const WeightedModelSpace& S, double r);
double hessian_distance(const WeightedModelSpace& S, double r);

inline constexpr double kOriginEps = 1e-6;

}  // namespace wgeom
