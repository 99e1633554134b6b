#ifndef FAMSW_BUNDLES_HPP
#define FAMSW_BUNDLES_HPP

#include <vector>

#include "famsw/ring.hpp"

namespace famsw {

/// A (virtual) vector bundle recorded by rank and total Chern class.
class BundleClass {
 public:
  /// Throws VirtualRank unless the total Chern class has constant term 1.
  BundleClass(int rank, GradedClass total_chern);

  static BundleClass trivial(const Space& space, int rank);
  /// Line bundle with the given first Chern class (degree 2 or zero).
  static BundleClass line(const GradedClass& c1);

  int rank() const { return rank_; }
  const GradedClass& total_chern() const { return total_; }
  const Space& ambient() const { return total_.ambient(); }

  /// c_i, the degree-2i part of the total Chern class.
  GradedClass chern(int i) const;
  /// c_1..c_n with n the complex dimension of the ambient.
  std::vector<GradedClass> chern_classes() const;

  /// Nonnegative rank and c_i = 0 for every i > rank.
  bool is_honest() const;

  friend bool operator==(const BundleClass& a, const BundleClass& b) {
    return a.rank_ == b.rank_ && a.total_ == b.total_;
  }

 private:
  int rank_;
  GradedClass total_;
};

BundleClass whitney_sum(const BundleClass& e, const BundleClass& f);
/// Formal difference e - f in K-theory.
BundleClass virtual_difference(const BundleClass& e, const BundleClass& f);
BundleClass dual(const BundleClass& e);
BundleClass tensor_line(const BundleClass& e, const BundleClass& line);
/// S^k(E) by formal Chern roots. Ranks 1..4 and k <= 64 are supported.
BundleClass sym_power(const BundleClass& e, int k);
/// rank-1 bundle with c_1 = a/2; a must be homogeneous of degree 2.
BundleClass half_line(const GradedClass& a);

GradedClass chern_character(const BundleClass& e);
GradedClass todd(const BundleClass& e);
/// Segre class s(E) = c(E)^{-1}.
GradedClass segre(const BundleClass& e);
/// Power sums p_1..p_n of the Chern roots, n = ambient complex dimension.
std::vector<GradedClass> power_sums(const BundleClass& e);

/// Multiplicative class with the given root series f (f[0] == 1):
/// prod_roots f(x).
GradedClass multiplicative_class(const BundleClass& e, const std::vector<Rational>& root_series);

inline constexpr int kMaxSymPowerRank = 4;
inline constexpr int kMaxSymPowerDegree = 64;

}  // namespace famsw

#endif  // FAMSW_BUNDLES_HPP
