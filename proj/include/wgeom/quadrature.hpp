#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace wgeom {

using Integrand = std::function<double(double)>;

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultFiniteTol = 1e-10;
inline constexpr double kDefaultImproperTol = 1e-8;
inline constexpr long kMaxPanels = 1000000;

// Adaptive Gauss-Kronrod (G7/K15) bisection on [a, b]. `tol` is an
// absolute target, relaxed by a machine-precision floor proportional to
// the magnitude of the integral. Panels are summed left to right so the
// result does not depend on evaluation order.
double integrate(const Integrand& g, double a, double b,
                 double tol = kDefaultFiniteTol);

// Two-pass wrapper targeting a relative tolerance: a coarse pass sizes the
// integral, then the absolute target is rel * |coarse estimate|.
double integrate_rel(const Integrand& g, double a, double b,
                     double rel = 1e-12);

// Integral of g over [a, inf) for an absolutely convergent tail, through the
// compactifying substitution t = a - 1 + exp(x / (1 - x)) on x in [0, 1).
// The transformed integrand is smooth and vanishes to all orders at x = 1
// for any integrable power or exponential tail. Evaluation failures and
// samples past t = 1e30 are treated as zero (their contribution is below
// the tolerance for any tail this library classifies as convergent).
double integrate_tail(const Integrand& g, double a, double rel = 1e-12);

// Log-scale asymptotics of a positive function G on [a, inf):
//   log G(s) ~ quad*s^2 + lin*s + logcoef*log(s).
// The leading nonzero component decides integrability of the tail.
struct LogAsymptotics {
  double quad = 0.0;
  double lin = 0.0;
  double logcoef = 0.0;

  bool tail_diverges() const {
    if (quad != 0.0) return quad > 0.0;
    if (lin != 0.0) return lin > 0.0;
    return logcoef >= -1.0;
  }
};

struct IntegralVerdict {
  enum class Status { Converges, Diverges, Inconclusive };
  Status status = Status::Inconclusive;
  double value = 0.0;     // Converges: integral value
  double abs_err = 0.0;   // Converges: error bound
  double partial = 0.0;   // Inconclusive: partial integral up to cutoff
  double cutoff = 0.0;

  bool converges() const { return status == Status::Converges; }
  bool diverges() const { return status == Status::Diverges; }
};

// Classifies the improper integral of g over [a, inf). With asymptotic
// metadata the verdict is exact (integral test on the leading scale) and a
// convergent value is computed through the compactifying substitution
// t = a + x/(1-x). Without metadata a doubling-cutoff heuristic is used
// and Inconclusive is a possible outcome.
IntegralVerdict classify_improper(const Integrand& g, double a,
                                  const std::optional<LogAsymptotics>& meta,
                                  double tol = kDefaultImproperTol);

}  // namespace wgeom
