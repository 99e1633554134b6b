#include <gtest/gtest.h>

#include "famsw/applications.hpp"
#include "test_util.hpp"

namespace famsw {
namespace {

using testing::code_of;

TEST(Severi, ProjectivePlaneNodes) {
  for (int d = 1; d <= 8; ++d) EXPECT_EQ(severi_one_point(cp2_data(), {d}, 2), 3 * (d - 1) * (d - 1));
  EXPECT_EQ(nodal_cp2(1), 0);
  EXPECT_EQ(nodal_cp2(4), 27);
  EXPECT_EQ(nodal_cp2(10), 243);
  EXPECT_EQ(code_of([] { nodal_cp2(0); }), ErrorCode::RangeError);
}

TEST(Severi, MultiplicityOneVanishes) {
  EXPECT_EQ(severi_one_point(cp2_data(), {5}, 1), 0);
  EXPECT_EQ(severi_one_point(k3_data(4), {1}, 1), 0);
}

TEST(Severi, Errors) {
  EXPECT_EQ(code_of([] { severi_one_point(cp2_data(), {1, 2}, 2); }), ErrorCode::ShapeMismatch);
  EXPECT_EQ(code_of([] { severi_one_point(cp2_data(), {1}, 0); }), ErrorCode::BadMultiplicity);
}

TEST(K3, TwistorCounts) {
  EXPECT_EQ(k3_twistor_count(0), 24);
  EXPECT_EQ(k3_twistor_count(2), 30);
  EXPECT_EQ(k3_twistor_count(-2), 18);
  EXPECT_EQ(severi_one_point(k3_data(0), {1}, 2), 24);
}

TEST(ToddGenus, Values) {
  EXPECT_EQ(todd_genus(k3_data()), 2);
  EXPECT_EQ(todd_genus(cp2_data()), 1);
  SurfaceData torus;
  torus.basis = {"a"};
  torus.intersection = {{0}};
  torus.canonical = {0};
  torus.c2 = 0;
  EXPECT_EQ(todd_genus(torus), 0);
}

TEST(UniversalPoly, DegreeTwo) {
  const UniversalPolynomial u = universal_poly(2);
  EXPECT_TRUE(u.verified);
  const std::map<std::string, Rational> want = {{"C2", 3}, {"CK", 2}, {"c2", 1}};
  EXPECT_EQ(u.named_coefficients(), want);
  for (int d = 1; d <= 10; ++d) EXPECT_EQ(u.evaluate({d * d, -3 * d, 9, 3}), 3 * (d - 1) * (d - 1));
  EXPECT_EQ(u.evaluate({0, 0, 0, 24}), 24);
}

TEST(UniversalPoly, MultiplicityOneIsZero) {
  const UniversalPolynomial u = universal_poly(1);
  EXPECT_TRUE(u.verified);
  EXPECT_TRUE(u.named_coefficients().empty());
}

TEST(UniversalPoly, AgreesWithDirectComputation) {
  for (int p = 1; p <= 5; ++p) {
    const UniversalPolynomial u = universal_poly(p);
    EXPECT_TRUE(u.verified) << p;
    for (int d = 1; d <= 6; ++d) {
      EXPECT_EQ(u.evaluate({d * d, -3 * d, 9, 3}), severi_one_point(cp2_data(), {d}, p)) << p << "," << d;
    }
    for (int c2 : {-4, 0, 6}) EXPECT_EQ(u.evaluate({c2, 0, 0, 24}), severi_one_point(k3_data(c2), {1}, p));
  }
}

TEST(UniversalPoly, Errors) {
  EXPECT_EQ(code_of([] { universal_poly(0); }), ErrorCode::RangeError);
  EXPECT_EQ(code_of([] { universal_poly(kMaxUniversalMultiplicity + 1); }), ErrorCode::RangeError);
}

TEST(UniversalPoly, FormalSurfaceRealizesNumbers) {
  const ChernNumbers n{5, -3, 7, 11};
  const SurfaceData s = formal_surface(n);
  EXPECT_EQ(s.intersection[0][0], 5);
  EXPECT_EQ(s.intersection[0][1], -3);
  EXPECT_EQ(s.intersection[1][1], 7);
  EXPECT_EQ(s.c2, 11);
}

}  // namespace
}  // namespace famsw
