#ifndef FAMSW_SYMMETRIC_HPP
#define FAMSW_SYMMETRIC_HPP

#include <map>
#include <vector>

#include "famsw/rational.hpp"
#include "famsw/ring.hpp"

namespace famsw::symmetric {

/// Polynomial over Q in formal Chern roots x_1..x_r, keyed by exponent vector.
using RootPolynomial = std::map<std::vector<int>, Rational>;

/// Polynomial in e_1..e_r, keyed by the exponent of each e_i.
using ElementaryPolynomial = std::map<std::vector<int>, Rational>;

RootPolynomial elementary_in_roots(int vars, int i);
RootPolynomial multiply(const RootPolynomial& a, const RootPolynomial& b);

/// Rewrites a symmetric polynomial in the elementary symmetric functions by
/// repeatedly cancelling the lexicographically leading monomial. Throws
/// RangeError on non-symmetric input.
ElementaryPolynomial to_elementary(int vars, RootPolynomial p);

/// Power sums sum_root root^j, j = 1..max_power, over the Chern roots of
/// S^k of a rank-r bundle: the roots are a.x for every multiset a of size k.
std::vector<RootPolynomial> symmetric_power_power_sums(int vars, int k, int max_power);

/// Substitutes classes for e_1..e_r (index 0 of `e` is e_1).
GradedClass substitute(const ElementaryPolynomial& p, const std::vector<GradedClass>& e,
                       const Space& space);

/// Newton identities over a graded ring. `e[i]` is e_{i+1}; missing entries
/// count as zero. Returns p_1..p_n.
std::vector<GradedClass> power_sums_from_elementary(const std::vector<GradedClass>& e, int n,
                                                    const Space& space);
/// Inverse direction; returns e_1..e_n.
std::vector<GradedClass> elementary_from_power_sums(const std::vector<GradedClass>& p, int n,
                                                    const Space& space);

}  // namespace famsw::symmetric

#endif  // FAMSW_SYMMETRIC_HPP
