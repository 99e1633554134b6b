#include <gtest/gtest.h>

#include "famsw/errors.hpp"
#include "famsw/expression.hpp"
#include "famsw/ring.hpp"
#include "famsw/surfaces.hpp"
#include "test_util.hpp"

namespace famsw {
namespace {

using testing::code_of;

Monomial mono(const std::vector<Generator>& gens, const std::string& text) {
  const Terms t = parse_terms(gens, text);
  EXPECT_EQ(t.size(), 1u) << text;
  return t.begin()->first;
}

Rule rule(const std::vector<Generator>& gens, const std::string& lhs, const std::string& rhs) {
  return {mono(gens, lhs), parse_terms(gens, rhs)};
}

Space cp2() {
  std::vector<Generator> gens = {{"h", 2, Parity::Even}};
  return make_space(gens, {rule(gens, "h^3", "0")}, 2, {{mono(gens, "h^2"), 1}});
}

Space torus2() {
  std::vector<Generator> gens = {{"t1", 1, Parity::Odd}, {"t2", 1, Parity::Odd}};
  return make_space(gens, {}, 1, {{mono(gens, "t1*t2"), 1}});
}

TEST(Ring, ProjectivePlaneProducts) {
  const Space s = cp2();
  const GradedClass h = GradedClass::generator(s, "h");
  EXPECT_EQ((h * h).to_string(), "h^2");
  EXPECT_TRUE((h * h * h).is_zero());
  EXPECT_EQ(s->betti_numbers(), (std::vector<int>{1, 0, 1, 0, 1}));
}

TEST(Ring, KoszulSignOnTorus) {
  const Space s = torus2();
  const GradedClass t1 = GradedClass::generator(s, "t1");
  const GradedClass t2 = GradedClass::generator(s, "t2");
  EXPECT_EQ(t1 * t2, -(t2 * t1));
  EXPECT_TRUE((t1 * t1).is_zero());
  EXPECT_EQ(integrate(s, t1 * t2), 1);
  EXPECT_EQ(integrate(s, t2 * t1), -1);
}

TEST(Ring, KoszulMultiplyReportsRepeatedOdd) {
  const std::vector<Generator> gens = {{"a", 1, Parity::Odd}, {"b", 1, Parity::Odd}, {"x", 2, Parity::Even}};
  const auto [s1, p1] = koszul_multiply(gens, Monomial({0, 1, 0}), Monomial({1, 0, 1}));
  EXPECT_EQ(s1, -1);
  EXPECT_EQ(p1, Monomial({1, 1, 1}));
  const auto [s2, p2] = koszul_multiply(gens, Monomial({1, 0, 0}), Monomial({1, 0, 0}));
  EXPECT_EQ(s2, 0);
}

TEST(Ring, DegreePartAddScale) {
  const Space s = cp2();
  const GradedClass c = parse_class(s, "1 + 3*h + 3*h^2");
  EXPECT_EQ(degree_part(c, 2), parse_class(s, "3*h"));
  EXPECT_TRUE(degree_part(c, 1).is_zero());
  const GradedClass h = GradedClass::generator(s, "h");
  const GradedClass zero = add(h, -h);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_TRUE(zero.terms().empty());
  EXPECT_EQ(scale(Rational(1) / 2, h).to_string(), "1/2*h");
  EXPECT_EQ(c.max_degree(), 4);
  EXPECT_FALSE(c.homogeneous_degree().has_value());
  EXPECT_EQ(h.homogeneous_degree(), 2);
}

TEST(Ring, Integration) {
  const Space s = cp2();
  const GradedClass h = GradedClass::generator(s, "h");
  EXPECT_EQ(integrate(s, h * h), 1);
  EXPECT_EQ(integrate(s, h), 0);
  for (int d = 1; d <= 5; ++d) {
    EXPECT_EQ(integrate(s, scale(3 * (d - 1) * (d - 1), h * h)), 3 * (d - 1) * (d - 1));
  }
}

TEST(Ring, PowerExpInverse) {
  const Space s = cp2();
  const GradedClass h = GradedClass::generator(s, "h");
  EXPECT_EQ(power(h, 0), GradedClass::one(s));
  EXPECT_TRUE(power(h, 3).is_zero());
  EXPECT_EQ(exp(h), parse_class(s, "1 + h + 1/2*h^2"));
  const GradedClass c = parse_class(s, "1 + 3*h + 3*h^2");
  EXPECT_EQ(inverse(c), parse_class(s, "1 - 3*h + 6*h^2"));
  EXPECT_EQ(inverse(c) * c, GradedClass::one(s));
  EXPECT_EQ(code_of([&] { (void)exp(GradedClass::one(s)); }), ErrorCode::WrongDegree);
  EXPECT_EQ(code_of([&] { (void)inverse(h); }), ErrorCode::WrongDegree);
}

TEST(Ring, AmbientMismatch) {
  const Space a = cp2();
  const Space b = cp2();
  const GradedClass ha = GradedClass::generator(a, "h");
  const GradedClass hb = GradedClass::generator(b, "h");
  EXPECT_EQ(code_of([&] { (void)(ha * hb); }), ErrorCode::AmbientMismatch);
  EXPECT_EQ(code_of([&] { (void)(ha + hb); }), ErrorCode::AmbientMismatch);
  EXPECT_EQ(code_of([&] { (void)integrate(a, hb); }), ErrorCode::AmbientMismatch);
}

TEST(Ring, ConstructionErrors) {
  std::vector<Generator> gens = {{"h", 2, Parity::Even}};
  EXPECT_EQ(code_of([&] { make_space({{"h", 2, Parity::Even}, {"h", 2, Parity::Even}}, {}, 1, {}); }),
            ErrorCode::DuplicateGenerator);
  EXPECT_EQ(code_of([&] { make_space({{"h", 0, Parity::Even}}, {}, 1, {}); }), ErrorCode::InvalidGenerator);
  std::vector<Generator> two = {{"a", 2, Parity::Even}, {"b", 4, Parity::Even}};
  EXPECT_EQ(code_of([&] { make_space(two, {rule(two, "b", "a")}, 2, {}); }), ErrorCode::DegreeMismatch);
  EXPECT_EQ(code_of([&] { make_space(gens, {}, 2, {{mono(gens, "h"), 1}}); }), ErrorCode::DegreeMismatch);
}

TEST(Ring, NonConfluentRules) {
  // a^2 b reduces to b^3 through the first rule and to 0 through the second.
  std::vector<Generator> gens = {{"a", 2, Parity::Even}, {"b", 2, Parity::Even}};
  EXPECT_EQ(code_of([&] { make_space(gens, {rule(gens, "a^2", "b^2"), rule(gens, "a*b", "0")}, 3, {}); }),
            ErrorCode::NonConfluent);
}

TEST(Ring, NonTerminatingRules) {
  std::vector<Generator> gens = {{"a", 2, Parity::Even}, {"b", 2, Parity::Even}};
  EXPECT_EQ(code_of([&] { make_space(gens, {rule(gens, "a^2", "b^2"), rule(gens, "b^2", "a^2")}, 2, {}); }),
            ErrorCode::NonTerminating);
}

TEST(Ring, ConfluentOverlapIsAccepted) {
  // Both rules kill a^2 b, so the overlap is harmless.
  std::vector<Generator> gens = {{"a", 2, Parity::Even}, {"b", 2, Parity::Even}};
  const Space s = make_space(gens, {rule(gens, "a^2", "0"), rule(gens, "a*b", "0")}, 3, {});
  EXPECT_EQ(s->betti_numbers(), (std::vector<int>{1, 0, 2, 0, 1, 0, 1}));
}

TEST(Ring, TorusModelBetti) {
  EXPECT_EQ(torus_model(0)->betti_numbers(), (std::vector<int>{1}));
  const Space t0 = torus_model(0);
  EXPECT_EQ(integrate(t0, GradedClass::one(t0)), 1);
  EXPECT_EQ(torus_model(1)->betti_numbers(), (std::vector<int>{1, 2, 1}));
  // Binomial count oracle: b_k = C(2q, k).
  for (int q = 1; q <= 3; ++q) {
    const auto betti = torus_model(q)->betti_numbers();
    ASSERT_EQ(betti.size(), static_cast<std::size_t>(2 * q + 1));
    for (int k = 0; k <= 2 * q; ++k) EXPECT_EQ(betti[k], binomial(2 * q, k)) << "q=" << q << " k=" << k;
  }
}

TEST(Ring, TorusTopClassIntegratesToOne) {
  const Space s = torus_model(2);
  GradedClass top = GradedClass::one(s);
  for (int i = 1; i <= 4; ++i) top *= GradedClass::generator(s, "t" + std::to_string(i));
  EXPECT_EQ(integrate(s, top), 1);
}

TEST(Ring, PointSpace) {
  const Space p = point_space();
  EXPECT_EQ(p->complex_dimension(), 0);
  EXPECT_EQ(integrate(p, GradedClass::constant(p, 5)), 5);
}

TEST(Ring, FormatRoundTrips) {
  const Space s = cp2();
  const GradedClass c = parse_class(s, "1 - h + 1/2*h^2");
  EXPECT_EQ(c.to_string(), "1 - h + 1/2*h^2");
  EXPECT_EQ(parse_class(s, c.to_string()), c);
}

}  // namespace
}  // namespace famsw
