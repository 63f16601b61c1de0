#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "wgeom/model_space.hpp"

using namespace wgeom;

namespace {

const double pi = std::numbers::pi;

WeightedModelSpace euclid(int m) {
  return WeightedModelSpace(m, space_form_warping(0.0));
}

WeightedModelSpace hyperbolic(int m) {
  return WeightedModelSpace(m, space_form_warping(-1.0));
}

WeightedModelSpace gaussian(int m) {
  return WeightedModelSpace(m, space_form_warping(0.0),
                            parse_profile("-(r^2)"));
}

}  // namespace

TEST_CASE("unit sphere volumes") {
  CHECK(unit_sphere_volume(2) == doctest::Approx(2 * pi).epsilon(1e-14));
  CHECK(unit_sphere_volume(3) == doctest::Approx(4 * pi).epsilon(1e-14));
  CHECK(unit_sphere_volume(4) == doctest::Approx(2 * pi * pi).epsilon(1e-14));
}

TEST_CASE("ball volumes") {
  CHECK(volume_ball(euclid(3), 1.0) ==
        doctest::Approx(4 * pi / 3).epsilon(1e-11));
  CHECK(volume_ball(hyperbolic(2), 1.0) ==
        doctest::Approx(2 * pi * (std::cosh(1.0) - 1.0)).epsilon(1e-11));
  // small-ball expansion: Vol ~ c_m R^m
  const double R = 1e-3;
  CHECK(volume_ball(euclid(3), R) ==
        doctest::Approx(4 * pi / 3 * R * R * R).epsilon(1e-8));
}

TEST_CASE("sphere areas") {
  CHECK(area_sphere(euclid(3), 2.0) == doctest::Approx(16 * pi).epsilon(1e-12));
  CHECK(area_sphere(hyperbolic(2), 1.0) ==
        doctest::Approx(2 * pi * std::sinh(1.0)).epsilon(1e-12));
  CHECK(area_sphere(gaussian(3), 1.0) ==
        doctest::Approx(4 * pi * std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("isoperimetric quotient") {
  CHECK(iso_quotient(euclid(3), 2.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-11));
  CHECK(iso_quotient(euclid(3), 0.0) == 0.0);
  // slope 1/m at the origin via the series branch
  const double r = 1e-7;
  CHECK(iso_quotient(euclid(3), r) / r == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK(iso_quotient(hyperbolic(2), 1e-7) / 1e-7 ==
        doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("sphere mean curvature") {
  CHECK(sphere_mean_curvature(euclid(3), 2.0) == doctest::Approx(0.5));
  CHECK(sphere_mean_curvature(hyperbolic(3), 1.0) ==
        doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-12));
  WeightedModelSpace sph(3, space_form_warping(1.0));
  CHECK(std::abs(sphere_mean_curvature(sph, pi / 2)) <= 1e-12);
  // series branch below the origin threshold
  CHECK(sphere_mean_curvature(euclid(3), 1e-8) ==
        doctest::Approx(1e8).epsilon(1e-10));
}

TEST_CASE("radial curvatures") {
  CHECK(radial_sec(hyperbolic(3), 1.7) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(radial_sec(euclid(5), 0.4) == doctest::Approx(0.0));
  CHECK(radial_ric(hyperbolic(3), 2.2) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("weighted curvatures") {
  const double inf = std::numeric_limits<double>::infinity();
  WeightedModelSpace g3 = gaussian(3);
  CHECK(radial_ric_h(g3, 1.0, inf) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(radial_ric_h(g3, 1.0, 1.0) == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(radial_sec_h(g3, 1.0, inf) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(radial_sec_h(g3, 1.0, 4.0) == doctest::Approx(0.5).epsilon(1e-12));
  WeightedModelSpace plain = euclid(3);
  CHECK(radial_ric_h(plain, 0.9, inf) == doctest::Approx(radial_ric(plain, 0.9)));

  // monotone in q, with q = inf as the supremum
  for (double r : {0.5, 1.0, 2.0}) {
    double prev = -1e300;
    for (double q : {0.5, 1.0, 4.0, 100.0}) {
      const double v = radial_ric_h(g3, r, q);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
    CHECK(radial_ric_h(g3, r, inf) >= prev - 1e-12);
    // radial isotropy of the model
    CHECK((g3.dim() - 1) * radial_sec_h(g3, r, 2.0) ==
          doctest::Approx(radial_ric_h(g3, r, 2.0)).epsilon(1e-12));
  }
}

TEST_CASE("distance function operators") {
  CHECK(laplacian_distance(euclid(3), 2.0) == doctest::Approx(1.0));
  CHECK(laplacian_distance(hyperbolic(2), 1.0) ==
        doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-12));
  CHECK(laplacian_distance(gaussian(3), 1.0) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(hessian_distance(euclid(3), 3.0) == doctest::Approx(1.0 / 3.0));
  CHECK(hessian_distance(hyperbolic(4), 1.0) ==
        doctest::Approx(sphere_mean_curvature(hyperbolic(4), 1.0)));
}

TEST_CASE("volume derivative equals area") {
  for (const auto& S : {euclid(3), hyperbolic(2), gaussian(3)}) {
    for (double R : {0.5, 1.0, 2.0}) {
      const double h = 1e-5;
      const double d =
          (volume_ball(S, R + h) - volume_ball(S, R - h)) / (2 * h);
      CHECK(std::abs(d - area_sphere(S, R)) / area_sphere(S, R) <= 1e-6);
    }
  }
}

TEST_CASE("quotient identity") {
  for (const auto& S : {euclid(4), hyperbolic(3), gaussian(2)}) {
    for (double R : {0.3, 1.1, 3.7}) {
      const double lhs = iso_quotient(S, R) * area_sphere(S, R);
      const double rhs = volume_ball(S, R);
      CHECK(std::abs(lhs - rhs) / rhs <= 1e-9);
    }
  }
}

TEST_CASE("weight anchoring") {
  WeightedModelSpace S(3, space_form_warping(0.0), parse_profile("r^2 + 5"));
  CHECK(S.weight()(0.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(S.weight()(2.0) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK_THROWS(WeightedModelSpace(1, space_form_warping(0.0)));
}

TEST_CASE("density asymptotics composition") {
  WeightedModelSpace g3 = gaussian(3);
  auto meta = g3.density_asymptotics(1 - 3, -1.0);  // capacity integrand
  REQUIRE(meta.has_value());
  CHECK(meta->quad == doctest::Approx(1.0).epsilon(1e-9));  // e^{+r^2} tail
  CHECK(meta->tail_diverges());
  auto area = g3.density_asymptotics(3 - 1, 1.0);
  REQUIRE(area.has_value());
  CHECK_FALSE(area->tail_diverges());
}
