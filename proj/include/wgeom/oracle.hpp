#pragma once

#include <vector>

#include "wgeom/model_space.hpp"

namespace wgeom {

struct RadialGrid {
  std::vector<double> nodes;
  std::vector<double> values;

  double value_at(double r) const;  // linear interpolation between nodes
};

// Finite-difference solve of the capacity potential on [rho, R]:
// (w^{m-1} e^f phi')' = 0 with phi(rho) = 1, phi(R) = 0.
RadialGrid solve_radial_bvp(const WeightedModelSpace& S, double rho, double R,
                            int N);

struct EnergyResult {
  double energy = 0.0;
  RadialGrid u;
};

// Minimizes the discrete weighted Dirichlet energy over piecewise-linear
// functions with u(rho) = 1, u(R) = 0. Same tridiagonal system as the BVP.
EnergyResult minimize_dirichlet_energy(const WeightedModelSpace& S, double rho,
                                       double R, int N);

// Poisson solve phi'' + phi' ((m-1) w'/w + f') = -1 on [0, R], phi(R) = 0,
// with the origin handled by the first-cell series phi'(r) ~ -r/m.
RadialGrid solve_exit_time(const WeightedModelSpace& S, double R, int N);

}  // namespace wgeom
