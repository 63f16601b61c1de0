#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "wgeom/extrinsic.hpp"

using namespace wgeom;

namespace {

const double pi = std::numbers::pi;

WeightedModelSpace euclid(int m) {
  return WeightedModelSpace(m, space_form_warping(0.0));
}

WeightedModelSpace hyper(int m) {
  return WeightedModelSpace(m, space_form_warping(-1.0));
}

WeightedModelSpace gauss(int m) {
  return WeightedModelSpace(m, space_form_warping(0.0), parse_profile("-(r^2)"));
}

}  // namespace

TEST_CASE("totally geodesic sub-models") {
  SubModel plane = totally_geodesic_submodel(euclid(3), 2);
  CHECK(plane.induced.dim() == 2);
  CHECK(volume_ball(plane.induced, 2.0) == doctest::Approx(4 * pi).epsilon(1e-11));
  CHECK_THROWS(totally_geodesic_submodel(euclid(3), 4));
  CHECK_THROWS(totally_geodesic_submodel(euclid(3), 1));

  for (double r : {0.5, 1.0, 2.0}) {
    auto res = mean_curvature_relation_check(
        totally_geodesic_submodel(gauss(3), 2), {r});
    CHECK(res.front() <= 1e-12);
  }
}

TEST_CASE("extrinsic Laplacian bounds") {
  WarpingFunction flat = space_form_warping(0.0);
  // equality case: the sec-lower bound with exact data reproduces the
  // induced-model Laplacian of a radial function
  WeightedModelSpace p2(2, flat);
  const double r = 1.5;
  const double Fp = -0.7, Fpp = 0.3;
  const double direct = Fpp + Fp * laplacian_distance(p2, r);
  CHECK(extrinsic_laplacian_bound(flat, 3, 2, ExtrinsicVariant::SecLower, 0.0,
                                  Fp, Fpp, 1.0, 0.0, 0.0, r) ==
        doctest::Approx(direct).epsilon(1e-12));

  // q-weighted display value
  CHECK(extrinsic_laplacian_bound(flat, 3, 2, ExtrinsicVariant::QWeighted, 1.0,
                                  -1.0, 0.0, 1.0, 0.0, 0.0, 2.0) ==
        doctest::Approx(-0.75).epsilon(1e-12));

  CHECK(extrinsic_laplacian_bound(flat, 3, 2, ExtrinsicVariant::SecUpper, 0.0,
                                  0.0, 1.0, 0.0, 0.0, 0.0, 2.0) == 0.0);
  CHECK_THROWS(extrinsic_laplacian_bound(flat, 3, 2, ExtrinsicVariant::SecLower,
                                         0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 2.0));
  CHECK_THROWS(extrinsic_laplacian_bound(flat, 3, 2, ExtrinsicVariant::SecLower,
                                         0.0, -1.0, 0.0, 1.5, 0.0, 0.0, 2.0));
}

TEST_CASE("balance conditions") {
  WarpingFunction flat = space_form_warping(0.0);
  SubmanifoldProfile eq{2, constant_profile(0.0), constant_profile(0.0), 1.0,
                        BoundSense::Upper};
  auto simpson = check_balance(BalanceKind::Simpson, eq, flat, {1.0, 2.0, 5.0});
  for (double mgn : simpson) CHECK(std::abs(mgn) <= 1e-9);

  SubmanifoldProfile strong{2, constant_profile(-10.0), constant_profile(0.0),
                            1.0, BoundSense::Upper};
  auto para = check_balance(BalanceKind::SubParabolicity, strong, flat, {1.0});
  CHECK(para.front() == doctest::Approx(8.0));  // -2/1 - (-10)

  SubmanifoldProfile lower{3, constant_profile(0.0), constant_profile(0.0),
                           1.0, BoundSense::Lower};
  auto hyp = check_balance(BalanceKind::SubParabolicity, lower, flat, {2.0});
  CHECK(hyp.front() == doctest::Approx(1.5));  // 0 >= -3/2 with margin 1.5

  CHECK_THROWS(check_balance(BalanceKind::SubQ, lower, flat, {1.0}, 4, 1.0));
  SubmanifoldProfile upq{2, constant_profile(-5.0), constant_profile(0.0), 1.0,
                         BoundSense::Upper};
  auto q = check_balance(BalanceKind::SubQ, upq, flat, {1.0}, 3, 1.0);
  CHECK(q.front() == doctest::Approx(-3.0 + 0.0));  // -2*3/2*1 - 0*psi... = -3
}

TEST_CASE("volume flux identity on sub-models") {
  for (const auto& amb : {euclid(3), hyper(3), gauss(3)}) {
    SubModel sub = totally_geodesic_submodel(amb, 2);
    for (double R : {1.0, 2.0}) {
      SimpsonReport rep = verify_simpson(sub, R);
      CHECK(rep.pass);
      CHECK(std::abs(rep.margin) <= 1e-9);
    }
  }
  SubModel plane = totally_geodesic_submodel(euclid(3), 2);
  SimpsonReport rep = verify_simpson(plane, 2.0);
  CHECK(rep.lhs == doctest::Approx(4 * pi).epsilon(1e-10));
  CHECK(rep.rhs == doctest::Approx(4 * pi).epsilon(1e-10));
}

TEST_CASE("sub-model reduction for equality profiles") {
  struct Case {
    WeightedModelSpace amb;
    int n;
    const char* fprime;  // psi = f' of the ambient weight
    ParabolicityVerdict::Status expect;
  };
  const Case cases[] = {
      {euclid(3), 2, "0", ParabolicityVerdict::Status::Parabolic},
      {hyper(3), 2, "0", ParabolicityVerdict::Status::Hyperbolic},
      {gauss(3), 2, "-(2*r)", ParabolicityVerdict::Status::Parabolic},
      {euclid(4), 3, "0", ParabolicityVerdict::Status::Hyperbolic},
      {hyper(4), 3, "0", ParabolicityVerdict::Status::Hyperbolic},
      {gauss(4), 3, "-(2*r)", ParabolicityVerdict::Status::Parabolic},
  };
  for (const auto& c : cases) {
    SubmanifoldProfile prof{c.n, parse_profile(c.fprime), constant_profile(0.0),
                            1.0, BoundSense::Upper};
    SubClassification cls =
        classify_submanifold(prof, c.amb.warping(), SubVariant::Sec);
    CHECK(cls.verdict.status == c.expect);
    // agreement with the induced model's own classification
    SubModel sub = totally_geodesic_submodel(c.amb, c.n);
    CHECK(classify_parabolicity(sub.induced, 1.0).status == c.expect);
  }
}

TEST_CASE("minimal submanifolds of negatively curved ambient spaces") {
  // b = 0, n = 3, eps = 1
  SubmanifoldProfile p1{3, cartan_hadamard_psi(0.0, 3, 1.0),
                        constant_profile(0.0), 1.0, BoundSense::Lower};
  SubClassification c1 =
      classify_submanifold(p1, space_form_warping(0.0), SubVariant::Sec);
  CHECK(c1.balance_ok);
  CHECK(c1.verdict.hyperbolic());

  // b = -1, n = 2, eps = 0.5
  SubmanifoldProfile p2{2, cartan_hadamard_psi(-1.0, 2, 0.5),
                        constant_profile(0.0), 1.0, BoundSense::Lower};
  SubClassification c2 =
      classify_submanifold(p2, space_form_warping(-1.0), SubVariant::Sec);
  CHECK(c2.balance_ok);
  CHECK(c2.verdict.hyperbolic());

  // weight-free case: minimal submanifold of a pinched Cartan-Hadamard space
  SubmanifoldProfile p3{2, constant_profile(0.0), constant_profile(0.0), 1.0,
                        BoundSense::Lower};
  SubClassification c3 =
      classify_submanifold(p3, space_form_warping(-1.0), SubVariant::Sec);
  CHECK(c3.balance_ok);
  CHECK(c3.verdict.hyperbolic());

  CHECK_THROWS(cartan_hadamard_psi(1.0, 3, 1.0));
  CHECK_THROWS(cartan_hadamard_psi(0.0, 3, 0.0));
}

TEST_CASE("bounded mean curvature criterion") {
  SubmanifoldProfile down{2, parse_profile("-r"), constant_profile(0.0), 1.0,
                          BoundSense::Upper};
  CriterionResult r1 = check_bounded_mean_curvature_criterion(
      down, space_form_warping(0.0), 1.0);
  REQUIRE(r1.premises_ok);
  CHECK(r1.classification.verdict.parabolic());

  CriterionResult r2 = check_bounded_mean_curvature_criterion(
      down, space_form_warping(-1.0), 1.0);
  REQUIRE(r2.premises_ok);
  CHECK(r2.classification.verdict.parabolic());

  SubmanifoldProfile up{2, parse_profile("r"), constant_profile(0.0), 1.0,
                        BoundSense::Lower};
  WarpingFunction decaying(
      parse_profile("r*exp(-r)")
          .with_asym({AsymptoticOrder::Kind::Exponential, -1.0}));
  CriterionResult r3 =
      check_bounded_mean_curvature_criterion(up, decaying, 1.0);
  REQUIRE(r3.premises_ok);
  CHECK(r3.classification.verdict.hyperbolic());

  // premise failure: psi does not escape
  SubmanifoldProfile flatpsi{2, constant_profile(0.0), constant_profile(0.0),
                             1.0, BoundSense::Upper};
  CriterionResult r4 = check_bounded_mean_curvature_criterion(
      flatpsi, space_form_warping(0.0), 1.0);
  CHECK_FALSE(r4.premises_ok);
}

TEST_CASE("weighted minimal hypersurface criterion") {
  WarpingFunction decaying(
      parse_profile("r*exp(-r)")
          .with_asym({AsymptoticOrder::Kind::Exponential, -1.0}));
  CriterionResult ok = check_h_minimal_hypersurface_criterion(
      decaying, parse_profile("-r"), 3, 1.0, 2.0);
  REQUIRE(ok.premises_ok);
  CHECK(ok.classification.verdict.parabolic());

  CriterionResult badh = check_h_minimal_hypersurface_criterion(
      decaying, parse_profile("r"), 3, 1.0, 2.0);
  CHECK_FALSE(badh.premises_ok);

  CriterionResult badw = check_h_minimal_hypersurface_criterion(
      space_form_warping(-1.0), parse_profile("-r"), 3, 1.0, 2.0);
  CHECK_FALSE(badw.premises_ok);
}
