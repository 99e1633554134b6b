#include <gtest/gtest.h>

#include "famsw/expression.hpp"
#include "famsw/surfaces.hpp"
#include "test_util.hpp"

namespace famsw {
namespace {

using testing::code_of;

TEST(Surfaces, ProjectivePlaneModel) {
  const SurfaceModel m = surface_model(cp2_data());
  EXPECT_EQ(m.tangent.rank(), 2);
  const GradedClass h = GradedClass::generator(m.space, "h");
  EXPECT_EQ(m.tangent.total_chern(), parse_class(m.space, "1 + 3*h + 3*h^2"));
  EXPECT_EQ(integrate(m.space, h * h), 1);
  EXPECT_EQ(noether_defect(cp2_data()), 0);
}

TEST(Surfaces, K3Model) {
  const SurfaceModel m = surface_model(k3_data(0));
  EXPECT_EQ(m.tangent.total_chern(), parse_class(m.space, "1 + 24*pt"));
  const GradedClass c = GradedClass::generator(m.space, "C");
  EXPECT_TRUE((c * c).is_zero());
  EXPECT_EQ(noether_defect(k3_data(0)), 0);
  const SurfaceModel m2 = surface_model(k3_data(2));
  EXPECT_EQ(integrate(m2.space, GradedClass::generator(m2.space, "C") * GradedClass::generator(m2.space, "C")), 2);
}

TEST(Surfaces, GenericTwoClassSurface) {
  SurfaceData d;
  d.basis = {"C", "k"};
  d.intersection = {{5, -2}, {-2, 7}};
  d.canonical = {0, 1};
  d.c2 = 11;
  const SurfaceModel m = surface_model(d);
  const GradedClass c = surface_class(m, {1, 0});
  const GradedClass k = surface_class(m, {0, 1});
  EXPECT_EQ(integrate(m.space, c * k), -2);
  EXPECT_EQ(integrate(m.space, k * k), 7);
  EXPECT_EQ(m.tangent.chern(1), -k);
  EXPECT_EQ(integrate(m.space, m.tangent.chern(2)), 11);
}

TEST(Surfaces, ShapeErrors) {
  SurfaceData d = cp2_data();
  d.intersection = {{1, 0}};
  EXPECT_EQ(code_of([&] { surface_model(d); }), ErrorCode::ShapeMismatch);
  SurfaceData e;
  e.basis = {"a", "b"};
  e.intersection = {{1, 2}, {3, 1}};
  e.canonical = {0, 0};
  EXPECT_EQ(code_of([&] { surface_model(e); }), ErrorCode::ShapeMismatch);
  EXPECT_EQ(code_of([&] { surface_class(surface_model(cp2_data()), {1, 2}); }), ErrorCode::ShapeMismatch);
  EXPECT_EQ(code_of([&] { torus_model(-1); }), ErrorCode::RangeError);
}

TEST(ProjectiveBundle, OverPointIsProjectivePlane) {
  const ProjBundleHandle h = projective_bundle(BundleClass::trivial(point_space(), 3));
  EXPECT_EQ(h.total->complex_dimension(), 2);
  EXPECT_TRUE(power(h.xi, 3).is_zero());
  EXPECT_EQ(integrate(h.total, power(h.xi, 2)), 1);
  EXPECT_EQ(pushforward(h, power(h.xi, 2)), GradedClass::one(h.base));
  EXPECT_TRUE(pushforward(h, h.xi).is_zero());
  EXPECT_EQ(h.total->betti_numbers(), (std::vector<int>{1, 0, 1, 0, 1}));
}

TEST(ProjectiveBundle, GrothendieckRelationOverProjectivePlane) {
  // V = N + C with c(N) = 1 + n1 + n2: xi^3 = -(n1 xi^2 + n2 xi).
  const SurfaceModel m = surface_model(cp2_data());
  const BundleClass n(2, parse_class(m.space, "1 + 2*h + 5*h^2"));
  const ProjBundleHandle h = projective_bundle(whitney_sum(n, BundleClass::trivial(m.space, 1)));
  const GradedClass n1 = pullback(h, n.chern(1));
  const GradedClass n2 = pullback(h, n.chern(2));
  EXPECT_EQ(power(h.xi, 3), -(n1 * power(h.xi, 2) + n2 * h.xi));
  EXPECT_EQ(h.total->complex_dimension(), 4);
  EXPECT_EQ(h.total->betti_numbers(), (std::vector<int>{1, 0, 2, 0, 3, 0, 2, 0, 1}));
}

TEST(ProjectiveBundle, RelativeTangentFirstChern) {
  const SurfaceModel m = surface_model(cp2_data());
  const BundleClass n = m.tangent;
  const ProjBundleHandle h = projective_bundle(whitney_sum(n, BundleClass::trivial(m.space, 1)));
  const BundleClass t = relative_tangent(h);
  EXPECT_EQ(t.rank(), 2);
  EXPECT_EQ(t.chern(1), scale(3, h.xi) + pullback(h, n.chern(1)));
}

TEST(ProjectiveBundle, PushforwardIsSegre) {
  // V rank 3 over CP^2 with c1 = v1: pi_*(xi^3) = s_1(V) = -v1.
  const SurfaceModel m = surface_model(cp2_data());
  const BundleClass v(3, parse_class(m.space, "1 + 4*h + 7*h^2"));
  const ProjBundleHandle h = projective_bundle(v);
  EXPECT_EQ(pushforward(h, power(h.xi, 3)), parse_class(m.space, "-4*h"));
  // s_2 = v1^2 - v2 from inverting 1 + v1 + v2 by hand.
  EXPECT_EQ(pushforward(h, power(h.xi, 4)), parse_class(m.space, "9*h^2"));
}

TEST(ProjectiveBundle, ExceptionalSelfIntersection) {
  // Blowing up a point of a surface: E|_E = O(-1) on P(C^2), so E.E = -1.
  const ProjBundleHandle h = projective_bundle(BundleClass::trivial(point_space(), 2));
  EXPECT_EQ(integrate(h.total, exceptional_class(h)), -1);
  EXPECT_EQ(hyperplane_line(h).chern(1), h.xi);
}

TEST(ProjectiveBundle, BaseTruncationSurvivesInTotalSpace) {
  // Base monomials above the base dimension die even though the total
  // space has higher dimension.
  const SurfaceModel m = surface_model(cp2_data());
  const ProjBundleHandle h = projective_bundle(BundleClass::trivial(m.space, 3));
  const GradedClass hh = pullback(h, GradedClass::generator(m.space, "h"));
  EXPECT_TRUE(power(hh, 3).is_zero());
  EXPECT_FALSE(power(hh, 2).is_zero());
}

TEST(ProjectiveBundle, XiNameAvoidsCollision) {
  const Space base = make_space({{"xi", 2, Parity::Even}}, {}, 1, {});
  const ProjBundleHandle h = projective_bundle(BundleClass::trivial(base, 2));
  EXPECT_NE(h.xi_name, "xi");
}

TEST(ProjectiveBundle, Errors) {
  const SurfaceModel m = surface_model(cp2_data());
  EXPECT_EQ(code_of([&] { projective_bundle(BundleClass::trivial(m.space, 0)); }), ErrorCode::VirtualRank);
  const BundleClass v = virtual_difference(BundleClass::trivial(m.space, 2), BundleClass::line(GradedClass::generator(m.space, "h")));
  EXPECT_EQ(code_of([&] { projective_bundle(v); }), ErrorCode::VirtualRank);
  const ProjBundleHandle h = projective_bundle(m.tangent);
  EXPECT_EQ(code_of([&] { pullback(h, h.xi); }), ErrorCode::AmbientMismatch);
  EXPECT_EQ(code_of([&] { pushforward(h, GradedClass::one(m.space)); }), ErrorCode::AmbientMismatch);
}

TEST(ProjectiveBundle, OverTorus) {
  const Space t = torus_model(1);
  const ProjBundleHandle h = projective_bundle(BundleClass::trivial(t, 2));
  const GradedClass top = pullback(h, parse_class(t, "t1*t2")) * h.xi;
  EXPECT_EQ(integrate(h.total, top), 1);
  EXPECT_EQ(h.total->betti_numbers(), (std::vector<int>{1, 2, 2, 2, 1}));
}

}  // namespace
}  // namespace famsw
