#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "wgeom/quadrature.hpp"

using namespace wgeom;

TEST_CASE("finite interval accuracy") {
  CHECK(integrate([](double s) { return s * s; }, 1.0, 2.0) ==
        doctest::Approx(7.0 / 3.0).epsilon(1e-12));
  CHECK(integrate([](double s) { return s * s; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  const double sinh2 = (std::sinh(2.0) / 2.0 - 1.0) / 2.0;
  CHECK(integrate([](double s) { return std::sinh(s) * std::sinh(s); }, 0.0,
                  1.0) == doctest::Approx(sinh2).epsilon(1e-12));
}

TEST_CASE("relative-tolerance wrapper") {
  auto g = [](double s) { return 1e8 * std::exp(-s); };
  const double exact = 1e8 * (1.0 - std::exp(-1.0));
  CHECK(std::abs(integrate_rel(g, 0.0, 1.0) - exact) / exact <= 1e-11);
}

TEST_CASE("additivity") {
  auto g = [](double s) { return std::cos(s) + 2.0; };
  for (double c : {0.5, 1.0, 2.9}) {
    const double split = integrate(g, 0.0, c) + integrate(g, c, 3.0);
    const double whole = integrate(g, 0.0, 3.0);
    CHECK(std::abs(split - whole) <= 2 * kDefaultFiniteTol);
  }
}

TEST_CASE("improper classification with metadata") {
  // s^-2: log g ~ -2 log s
  auto v1 = classify_improper([](double s) { return 1.0 / (s * s); }, 1.0,
                              LogAsymptotics{0, 0, -2});
  REQUIRE(v1.converges());
  CHECK(v1.value == doctest::Approx(1.0).epsilon(1e-8));

  auto v2 = classify_improper([](double s) { return 1.0 / s; }, 1.0,
                              LogAsymptotics{0, 0, -1});
  CHECK(v2.diverges());

  auto v3 = classify_improper(
      [](double s) { return 1.0 / (std::sinh(s) * std::sinh(s)); }, 1.0,
      LogAsymptotics{0, -2, 0});
  REQUIRE(v3.converges());
  CHECK(v3.value ==
        doctest::Approx(1.0 / std::tanh(1.0) - 1.0).epsilon(1e-8));

  auto v4 = classify_improper([](double s) { return std::exp(s * s * 0.1); },
                              1.0, LogAsymptotics{0.1, 0, 0});
  CHECK(v4.diverges());
}

TEST_CASE("improper classification heuristic") {
  auto v1 = classify_improper([](double s) { return 1.0 / (s * s); }, 1.0,
                              std::nullopt);
  CHECK(v1.converges());
  CHECK(v1.value == doctest::Approx(1.0).epsilon(1e-6));

  auto v2 =
      classify_improper([](double s) { return 1.0 / s; }, 1.0, std::nullopt);
  CHECK(!v2.converges());
}

TEST_CASE("monotone integrand gives monotone partials") {
  auto g = [](double s) { return std::exp(-s); };
  double prev = 0.0;
  for (int k = 1; k <= 8; ++k) {
    const double cur = integrate(g, 0.0, 0.5 * k);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("tail divergence rule on log asymptotics") {
  CHECK(LogAsymptotics{0, 0, -1}.tail_diverges());
  CHECK_FALSE(LogAsymptotics{0, 0, -1.0001}.tail_diverges());
  CHECK(LogAsymptotics{0, 0.1, -5}.tail_diverges());
  CHECK_FALSE(LogAsymptotics{-0.1, 3, 2}.tail_diverges());
  CHECK(LogAsymptotics{0, 0, 0}.tail_diverges());  // constant integrand
}
