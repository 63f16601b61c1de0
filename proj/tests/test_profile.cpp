#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "wgeom/profile.hpp"

using namespace wgeom;

TEST_CASE("parsed profile evaluation and AD orders") {
  RadialProfile p = parse_profile("sinh(r)");
  CHECK(p.eval(1.0, 0) == doctest::Approx(std::sinh(1.0)).epsilon(1e-12));
  CHECK(p.eval(0.0, 1) == doctest::Approx(1.0).epsilon(1e-14));
  RadialProfile lin = parse_profile("r");
  CHECK(lin.eval(0.7, 2) == 0.0);
  CHECK(lin.eval(17.0, 2) == 0.0);
}

TEST_CASE("space form warpings") {
  WarpingFunction flat = space_form_warping(0.0);
  CHECK(flat(2.0) == doctest::Approx(2.0).epsilon(1e-14));

  WarpingFunction hyp = space_form_warping(-1.0);
  CHECK(hyp(1.0) == doctest::Approx(std::sinh(1.0)).epsilon(1e-12));

  WarpingFunction sph = space_form_warping(1.0);
  CHECK(sph(std::numbers::pi / 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sph.domain_sup() == doctest::Approx(std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("space form curvature is constant") {
  for (double b : {-2.0, -1.0, -0.25, 0.0, 0.5, 1.0}) {
    WarpingFunction w = space_form_warping(b);
    const double hi = std::min(w.domain_sup() * 0.95, 8.0);
    for (int i = 1; i <= 64; ++i) {
      const double r = hi * i / 64.0;
      const Dual2 j = w.jet(r);
      CHECK(std::abs(-j.d2 / j.v - b) <= 1e-10);
    }
  }
}

TEST_CASE("warping validation") {
  CHECK_THROWS(WarpingFunction(parse_profile("r+1")));      // w(0) != 0
  CHECK_THROWS(WarpingFunction(parse_profile("2*r")));      // w'(0) != 1
  CHECK_THROWS(WarpingFunction(parse_profile("r - r^2")));  // goes negative
}

TEST_CASE("AD matches central differences") {
  const char* exprs[] = {"sinh(r)",        "r^2 + 3*r",     "exp(-(r^2))",
                         "log(r + 1)",     "sqrt(r + 1)",   "cos(r)*exp(-r)",
                         "sinh(r)/cosh(r)", "r^3/(1 + r)"};
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> pt(0.1, 3.0);
  const double h = 1e-5;
  for (const char* e : exprs) {
    RadialProfile p = parse_profile(e);
    for (int i = 0; i < 100; ++i) {
      const double r = pt(rng);
      const Dual2 j = p.jet(r);
      const double fp = p(r + h), fm = p(r - h), f0 = j.v;
      const double d1 = (fp - fm) / (2 * h);
      const double d2 = (fp - 2 * f0 + fm) / (h * h);
      const double s1 = std::max({1.0, std::abs(j.d1)});
      const double s2 = std::max({1.0, std::abs(j.d2), std::abs(f0) * 1e6 * h});
      CHECK(std::abs(j.d1 - d1) / s1 <= 1e-6);
      CHECK(std::abs(j.d2 - d2) / s2 <= 2e-5);  // fd noise ~ eps/h^2
    }
  }
}

TEST_CASE("print / reparse round trip") {
  const char* exprs[] = {"1 - r^2/2", "sinh(r)/cosh(r)", "r^(2^2)",
                         "(r+1)*(r-2)", "2 - 3 - 4", "2/(3/r)", "-(r) + 1"};
  for (const char* e : exprs) {
    RadialProfile p = parse_profile(e);
    RadialProfile q = parse_profile(p.text());
    for (double r : {0.3, 1.0, 2.7}) {
      CHECK(p(r) == doctest::Approx(q(r)).epsilon(1e-14));
      CHECK(p.eval(r, 1) == doctest::Approx(q.eval(r, 1)).epsilon(1e-12));
    }
  }
}

TEST_CASE("antiderivative profile") {
  RadialProfile f = antiderivative_profile(parse_profile("2*r"), 0.0);
  CHECK(f(2.0) == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(f.eval(2.0, 1) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(f.eval(2.0, 2) == doctest::Approx(2.0).epsilon(1e-12));
  RadialProfile g = antiderivative_profile(parse_profile("1/r"), 1.0);
  CHECK(g(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("primitive asymptotics probe") {
  auto a = probe_primitive_asymptotics(parse_profile("-(2*r)"));
  REQUIRE(a.has_value());
  CHECK(a->quad == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(a->lin == 0.0);
  CHECK(a->logcoef == 0.0);

  auto b = probe_primitive_asymptotics(parse_profile("3"));
  REQUIRE(b.has_value());
  CHECK(b->quad == 0.0);
  CHECK(b->lin == doctest::Approx(3.0).epsilon(1e-12));

  auto c = probe_primitive_asymptotics(parse_profile("-(1/r)"));
  REQUIRE(c.has_value());
  CHECK(c->logcoef == doctest::Approx(-1.0).epsilon(1e-9));

  // coth-type bounds settle to their exponential-scale limit
  auto d = probe_primitive_asymptotics(parse_profile("-(sinh(r)/cosh(r))"));
  REQUIRE(d.has_value());
  CHECK(d->lin == doctest::Approx(-1.0).epsilon(1e-9));

  // log r growth does not fit the probe model and must be refused
  CHECK_FALSE(probe_primitive_asymptotics(parse_profile("log(r)")).has_value());
}

TEST_CASE("additive asymptotics probe") {
  auto a = probe_additive_asymptotics(parse_profile("-(r^2)"));
  REQUIRE(a.has_value());
  CHECK(a->quad == doctest::Approx(-1.0).epsilon(1e-12));
  auto b = probe_additive_asymptotics(parse_profile("r/2 + 1"));
  REQUIRE(b.has_value());
  CHECK(b->lin == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("profile algebra helpers") {
  RadialProfile p = parse_profile("r^2 + 1");
  CHECK(shift_to_zero(p, 0.0)(0.0) == 0.0);
  CHECK(shift_to_zero(p, 2.0)(2.0) == 0.0);
  CHECK(negate(p)(3.0) == doctest::Approx(-10.0));
  CHECK(add(p, parse_profile("r"))(2.0) == doctest::Approx(7.0));
  CHECK(scale(p, 0.5)(1.0) == doctest::Approx(1.0));
  CHECK(constant_profile(4.0)(9.0) == 4.0);
}
