#pragma once

#include <functional>

#include "wgeom/model_space.hpp"

namespace wgeom {

struct CapacityResult {
  double value = 0.0;        // weighted capacity V0 / denominator
  double denominator = 0.0;  // int_rho^R w^{1-m} e^{-f}
  double rho = 0.0;
  double R = 0.0;
  // Capacity potential: 1 at rho, 0 at R, non-increasing in between.
  std::function<double(double)> potential;
};

struct ParabolicityVerdict {
  enum class Status { Parabolic, Hyperbolic, Inconclusive };
  Status status = Status::Inconclusive;
  IntegralVerdict evidence;
  double rho_used = 0.0;
  double capacity = 0.0;  // capacity at infinity; 0 when parabolic

  bool parabolic() const { return status == Status::Parabolic; }
  bool hyperbolic() const { return status == Status::Hyperbolic; }
};

CapacityResult potential(const WeightedModelSpace& S, double rho, double R);

ParabolicityVerdict capacity_at_infinity(const WeightedModelSpace& S,
                                         double rho);
ParabolicityVerdict classify_parabolicity(const WeightedModelSpace& S,
                                          double rho);

// Mean exit time transplant: phi_R(s) = int_s^R q_{w,f}(t) dt, with
// phi_R(R) = 0 and phi_R' = -q_{w,f}.
std::function<double(double)> exit_time_transplant(const WeightedModelSpace& S,
                                                   double R);

struct GeneralizedPotentialResult {
  double flux = 0.0;         // |phi'(rho)|
  double denominator = 0.0;  // int_rho^R w^{1-eff} e^{-ftilde}
  std::function<double(double)> potential;
  IntegralVerdict tail;  // classification of the R -> inf tail
};

// Potential of the drifted operator F'' + F' ((eff-1) w'/w + drift) on
// [rho, R]; ftilde(r) = int_rho^r drift, integrand w^{1-eff} e^{-ftilde}.
GeneralizedPotentialResult generalized_potential(const WarpingFunction& w,
                                                 double eff_dim,
                                                 const RadialProfile& drift,
                                                 double rho, double R);

// Tail classification for the same integrand over [rho, inf).
IntegralVerdict generalized_tail(const WarpingFunction& w, double eff_dim,
                                 const RadialProfile& drift, double rho);

}  // namespace wgeom
