#include "wgeom/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wgeom {

namespace {

// Thomas algorithm for a tridiagonal system; diagonals indexed by row.
std::vector<double> solve_tridiagonal(std::vector<double> lower,
                                      std::vector<double> diag,
                                      std::vector<double> upper,
                                      std::vector<double> rhs) {
  const size_t n = diag.size();
  for (size_t i = 1; i < n; ++i) {
    const double m = lower[i] / diag[i - 1];
    diag[i] -= m * upper[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  std::vector<double> x(n);
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  for (size_t i = n - 1; i-- > 0;) x[i] = (rhs[i] - upper[i] * x[i + 1]) / diag[i];
  return x;
}

// Midpoint coefficients c_{i+1/2} = w^{m-1} e^f at cell midpoints.
std::vector<double> midpoint_coeffs(const WeightedModelSpace& S,
                                    const std::vector<double>& nodes) {
  std::vector<double> c(nodes.size() - 1);
  for (size_t i = 0; i + 1 < nodes.size(); ++i)
    c[i] = S.area_density(0.5 * (nodes[i] + nodes[i + 1]));
  return c;
}

std::vector<double> uniform_nodes(double a, double b, int N) {
  std::vector<double> nodes(N + 1);
  const double h = (b - a) / N;
  for (int i = 0; i <= N; ++i) nodes[i] = a + i * h;
  nodes[N] = b;
  return nodes;
}

RadialGrid solve_conservative(const WeightedModelSpace& S, double rho,
                              double R, int N) {
  auto nodes = uniform_nodes(rho, R, N);
  auto c = midpoint_coeffs(S, nodes);
  // Interior unknowns phi_1..phi_{N-1}; phi_0 = 1, phi_N = 0.
  const int n = N - 1;
  std::vector<double> lower(n), diag(n), upper(n), rhs(n, 0.0);
  for (int i = 0; i < n; ++i) {
    lower[i] = c[i];
    diag[i] = -(c[i] + c[i + 1]);
    upper[i] = c[i + 1];
  }
  rhs[0] -= c[0] * 1.0;
  auto interior = solve_tridiagonal(lower, diag, upper, rhs);
  RadialGrid out;
  out.nodes = std::move(nodes);
  out.values.resize(N + 1);
  out.values[0] = 1.0;
  out.values[N] = 0.0;
  for (int i = 0; i < n; ++i) out.values[i + 1] = interior[i];
  return out;
}

}  // namespace

double RadialGrid::value_at(double r) const {
  if (r <= nodes.front()) return values.front();
  if (r >= nodes.back()) return values.back();
  const auto it = std::upper_bound(nodes.begin(), nodes.end(), r);
  const size_t i = it - nodes.begin();
  const double t = (r - nodes[i - 1]) / (nodes[i] - nodes[i - 1]);
  return (1.0 - t) * values[i - 1] + t * values[i];
}

RadialGrid solve_radial_bvp(const WeightedModelSpace& S, double rho, double R,
                            int N) {
  if (!(0.0 < rho && rho < R)) throw std::invalid_argument("need 0 < rho < R");
  if (N < 16) throw std::invalid_argument("grid too coarse");
  return solve_conservative(S, rho, R, N);
}

EnergyResult minimize_dirichlet_energy(const WeightedModelSpace& S, double rho,
                                       double R, int N) {
  // The discrete energy V0 * sum c_{i+1/2} (u_{i+1}-u_i)^2 / h is a convex
  // quadratic whose normal equations are exactly the conservative-form
  // tridiagonal system, so the minimizer is the BVP solution.
  EnergyResult out;
  out.u = solve_radial_bvp(S, rho, R, N);
  auto c = midpoint_coeffs(S, out.u.nodes);
  const double h = (R - rho) / N;
  double e = 0.0;
  for (int i = 0; i < N; ++i) {
    const double d = out.u.values[i + 1] - out.u.values[i];
    e += c[i] * d * d / h;
  }
  out.energy = unit_sphere_volume(S.dim()) * e;
  return out;
}

RadialGrid solve_exit_time(const WeightedModelSpace& S, double R, int N) {
  if (!(R > 0.0)) throw std::invalid_argument("R must be positive");
  if (N < 16) throw std::invalid_argument("grid too coarse");
  auto nodes = uniform_nodes(0.0, R, N);
  auto c = midpoint_coeffs(S, nodes);
  const double h = R / N;
  // Unknowns phi_0..phi_{N-1}; phi_N = 0. Row 0 encodes the origin series
  // phi(0) - phi(h) = h^2/(2m) from phi'(r) ~ -r/m near the pole.
  const int n = N;
  std::vector<double> lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0);
  diag[0] = 1.0;
  upper[0] = -1.0;
  rhs[0] = h * h / (2.0 * S.dim());
  for (int i = 1; i < n; ++i) {
    lower[i] = c[i - 1];
    diag[i] = -(c[i - 1] + c[i]);
    upper[i] = c[i];
    rhs[i] = -h * h * S.area_density(nodes[i]);
  }
  // Last row references phi_N = 0; upper[n-1] multiplies nothing.
  auto phi = solve_tridiagonal(lower, diag, upper, rhs);
  RadialGrid out;
  out.nodes = std::move(nodes);
  out.values.resize(N + 1);
  for (int i = 0; i < N; ++i) out.values[i] = phi[i];
  out.values[N] = 0.0;
  return out;
}

}  // namespace wgeom
