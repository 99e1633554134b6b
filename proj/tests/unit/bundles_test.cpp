#include <gtest/gtest.h>

#include "famsw/bundles.hpp"
#include "famsw/expression.hpp"
#include "famsw/surfaces.hpp"
#include "test_util.hpp"

namespace famsw {
namespace {

using testing::code_of;

// Free graded ring on c1 (deg 2) and c2 (deg 4), truncated above degree 2n.
Space universal_rank2(int n) {
  return make_space({{"c1", 2, Parity::Even}, {"c2", 4, Parity::Even}}, {}, n, {});
}

// Free ring on formal roots of degree 2.
Space roots_space(int count, int n) {
  std::vector<Generator> gens;
  for (int i = 1; i <= count; ++i) gens.push_back({"x" + std::to_string(i), 2, Parity::Even});
  return make_space(gens, {}, n, {});
}

GradedClass cls(const Space& s, const std::string& text) { return parse_class(s, text); }

struct Cp2 {
  SurfaceModel model = surface_model(cp2_data());
  GradedClass h = GradedClass::generator(model.space, "h");
  BundleClass line(int d) const { return BundleClass::line(scale(d, h)); }
};

TEST(Bundles, WhitneyWithTrivial) {
  const Cp2 c;
  const BundleClass e = whitney_sum(c.model.tangent, BundleClass::trivial(c.model.space, 3));
  EXPECT_EQ(e.rank(), 5);
  EXPECT_EQ(e.total_chern(), c.model.tangent.total_chern());
}

TEST(Bundles, NodalBundleSecondChern) {
  // O(d) + O(d) (x) T*: direct expansion (1 + d h)(1 + (2d-3) h + (d^2-3d+3) h^2).
  const Cp2 c;
  for (int d = 1; d <= 8; ++d) {
    const BundleClass e = whitney_sum(c.line(d), tensor_line(dual(c.model.tangent), c.line(d)));
    EXPECT_EQ(e.rank(), 3);
    const Rational want = Rational(d * d - 3 * d + 3) + Rational(d) * (2 * d - 3);
    EXPECT_EQ(integrate(c.model.space, e.chern(2)), want);
    EXPECT_EQ(want, 3 * (d - 1) * (d - 1));
  }
}

TEST(Bundles, VirtualDifferenceHasRankZero) {
  const Cp2 c;
  const BundleClass v = virtual_difference(c.model.tangent, c.model.tangent);
  EXPECT_EQ(v.rank(), 0);
  EXPECT_EQ(v.total_chern(), GradedClass::one(c.model.space));
  const BundleClass w = virtual_difference(BundleClass::trivial(c.model.space, 0), c.line(1));
  EXPECT_EQ(w.rank(), -1);
  EXPECT_FALSE(w.is_honest());
}

TEST(Bundles, Dual) {
  const Cp2 c;
  EXPECT_EQ(dual(dual(c.model.tangent)), c.model.tangent);
  EXPECT_EQ(dual(c.line(2)).chern(1), scale(-2, c.h));
  EXPECT_EQ(dual(c.model.tangent).total_chern(), cls(c.model.space, "1 - 3*h + 3*h^2"));
}

TEST(Bundles, TensorLine) {
  const Cp2 c;
  EXPECT_EQ(tensor_line(c.line(2), c.line(5)).chern(1), scale(7, c.h));
  // Root-shift oracle (x + l)(y + l).
  const Space s = make_space({{"c1", 2, Parity::Even}, {"c2", 4, Parity::Even}, {"l", 2, Parity::Even}}, {}, 3, {});
  const BundleClass e(2, cls(s, "1 + c1 + c2"));
  const BundleClass t = tensor_line(e, BundleClass::line(cls(s, "l")));
  EXPECT_EQ(t.chern(1), cls(s, "c1 + 2*l"));
  EXPECT_EQ(t.chern(2), cls(s, "c2 + c1*l + l^2"));
  for (int d = -3; d <= 6; ++d) {
    const BundleClass td = tensor_line(dual(c.model.tangent), c.line(d));
    EXPECT_EQ(td.chern(1), scale(2 * d - 3, c.h));
    EXPECT_EQ(td.chern(2), scale(d * d - 3 * d + 3, c.h * c.h));
  }
  EXPECT_EQ(code_of([&] { tensor_line(c.model.tangent, c.model.tangent); }), ErrorCode::NotALine);
  const Cp2 other;
  EXPECT_EQ(code_of([&] { tensor_line(c.model.tangent, other.line(1)); }), ErrorCode::AmbientMismatch);
}

TEST(Bundles, TensorLineOnVirtualBundle) {
  // (E - F) (x) L = E (x) L - F (x) L.
  const Cp2 c;
  const BundleClass e = c.model.tangent;
  const BundleClass f = c.line(1);
  const BundleClass l = c.line(-2);
  EXPECT_EQ(tensor_line(virtual_difference(e, f), l), virtual_difference(tensor_line(e, l), tensor_line(f, l)));
}

TEST(Bundles, SymmetricPowerSmallCases) {
  const Cp2 c;
  const BundleClass t = c.model.tangent;
  EXPECT_EQ(sym_power(t, 0), BundleClass::trivial(c.model.space, 1));
  EXPECT_EQ(sym_power(t, 1), t);
}

TEST(Bundles, SymmetricSquareFormalRoots) {
  // Roots 2x, x+y, 2y.
  const Space s = universal_rank2(3);
  const BundleClass e(2, cls(s, "1 + c1 + c2"));
  const BundleClass s2 = sym_power(e, 2);
  EXPECT_EQ(s2.rank(), 3);
  EXPECT_EQ(s2.chern(1), cls(s, "3*c1"));
  EXPECT_EQ(s2.chern(2), cls(s, "2*c1^2 + 4*c2"));
  EXPECT_EQ(s2.chern(3), cls(s, "4*c1*c2"));
}

TEST(Bundles, SymmetricPowerMatchesSplitRoots) {
  // S^k of a sum of lines is the sum of lines over monomials of degree k.
  for (int r = 1; r <= 3; ++r) {
    const Space s = roots_space(r, 4);
    std::vector<GradedClass> x;
    BundleClass e = BundleClass::trivial(s, 0);
    for (int i = 0; i < r; ++i) {
      x.push_back(GradedClass::generator(s, static_cast<std::size_t>(i)));
      e = whitney_sum(e, BundleClass::line(x.back()));
    }
    for (int k = 0; k <= 5; ++k) {
      GradedClass want = GradedClass::one(s);
      int rank = 0;
      // Enumerate exponent vectors a with |a| = k.
      std::vector<int> a(r, 0);
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == r - 1) {
          a[i] = left;
          GradedClass root(s);
          for (int j = 0; j < r; ++j) root += scale(a[j], x[j]);
          want *= GradedClass::one(s) + root;
          ++rank;
          return;
        }
        for (int v = 0; v <= left; ++v) {
          a[i] = v;
          rec(i + 1, left - v);
        }
      };
      rec(0, k);
      const BundleClass got = sym_power(e, k);
      EXPECT_EQ(got.rank(), rank) << "r=" << r << " k=" << k;
      EXPECT_EQ(got.total_chern(), want) << "r=" << r << " k=" << k;
    }
  }
}

TEST(Bundles, SymmetricPowerErrors) {
  const Cp2 c;
  EXPECT_EQ(code_of([&] { sym_power(virtual_difference(c.line(1), c.line(2)), 2); }), ErrorCode::VirtualInput);
  EXPECT_EQ(code_of([&] { sym_power(BundleClass::trivial(c.model.space, 5), 2); }), ErrorCode::RankTooLarge);
  EXPECT_EQ(code_of([&] { sym_power(c.model.tangent, kMaxSymPowerDegree + 1); }), ErrorCode::RankTooLarge);
  EXPECT_EQ(code_of([&] { sym_power(c.model.tangent, -1); }), ErrorCode::RangeError);
}

TEST(Bundles, ChernCharacter) {
  const Cp2 c;
  EXPECT_EQ(chern_character(c.line(1)), exp(c.h));
  // Newton oracle for rank 2: 2 + c1 + (c1^2 - 2c2)/2 + (c1^3 - 3c1c2)/6.
  const Space s = universal_rank2(3);
  const BundleClass e(2, cls(s, "1 + c1 + c2"));
  EXPECT_EQ(chern_character(e), cls(s, "2 + c1 + (c1^2 - 2*c2)/2 + (c1^3 - 3*c1*c2)/6"));
}

TEST(Bundles, ToddClass) {
  const Cp2 c;
  EXPECT_EQ(todd(BundleClass::trivial(c.model.space, 4)), GradedClass::one(c.model.space));
  const SurfaceModel k3 = surface_model(k3_data(0));
  EXPECT_EQ(integrate(k3.space, degree_part(todd(k3.tangent), 4)), 2);
  EXPECT_EQ(integrate(c.model.space, degree_part(todd(c.model.tangent), 4)), 1);
  // Line bundle: 1 + c/2 + c^2/12 + 0 c^3 - c^4/720.
  const Space s = roots_space(1, 4);
  const BundleClass l = BundleClass::line(GradedClass::generator(s, "x1"));
  EXPECT_EQ(todd(l), cls(s, "1 + x1/2 + x1^2/12 - x1^4/720"));
}

TEST(Bundles, SegreIsInverse) {
  const Cp2 c;
  EXPECT_EQ(segre(c.model.tangent) * c.model.tangent.total_chern(), GradedClass::one(c.model.space));
  EXPECT_EQ(segre(c.model.tangent), cls(c.model.space, "1 - 3*h + 6*h^2"));
}

TEST(Bundles, HalfLine) {
  const Cp2 c;
  EXPECT_EQ(half_line(GradedClass(c.model.space)), BundleClass::trivial(c.model.space, 1));
  const GradedClass l0 = scale(5, c.h);
  const BundleClass hl = half_line(l0 - c.model.tangent.chern(1));
  EXPECT_EQ(hl.chern(1), c.h);
  const BundleClass odd = half_line(c.h);
  EXPECT_EQ(tensor_line(odd, odd).chern(1), c.h);
  EXPECT_EQ(code_of([&] { half_line(c.h * c.h); }), ErrorCode::WrongDegree);
}

TEST(Bundles, ConstructionErrors) {
  const Cp2 c;
  EXPECT_EQ(code_of([&] { BundleClass(2, scale(2, GradedClass::one(c.model.space))); }), ErrorCode::VirtualRank);
  EXPECT_EQ(code_of([&] { BundleClass::line(c.h * c.h); }), ErrorCode::WrongDegree);
  const Space t = torus_model(1);
  EXPECT_EQ(code_of([&] { BundleClass(1, cls(t, "1 + t1")); }), ErrorCode::WrongDegree);
}

TEST(Bundles, HonestyAndPowerSums) {
  const Cp2 c;
  EXPECT_TRUE(c.model.tangent.is_honest());
  EXPECT_FALSE(BundleClass(1, cls(c.model.space, "1 + h + h^2")).is_honest());
  const auto p = power_sums(c.model.tangent);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], scale(3, c.h));
  EXPECT_EQ(p[1], scale(3, c.h * c.h));  // c1^2 - 2 c2 = 9 - 6
}

}  // namespace
}  // namespace famsw
