#ifndef FAMSW_KURANISHI_HPP
#define FAMSW_KURANISHI_HPP

#include <string>
#include <vector>

#include "famsw/blowup.hpp"
#include "famsw/bundles.hpp"
#include "famsw/ring.hpp"
#include "famsw/surfaces.hpp"

namespace famsw {

/// Kernel and cokernel bundles (V, W) of a Kuranishi model over `base`.
/// The invariant depends on the model only through Chern data, so no map
/// V -> W is stored.
struct KuranishiData {
  Space base;
  BundleClass v;
  BundleClass w;
  int exponent = 0;
  GradedClass insertion;

  KuranishiData(BundleClass kernel, BundleClass cokernel, int d);
  KuranishiData(BundleClass kernel, BundleClass cokernel, int d, GradedClass eta);
};

/// int_{P(V)} xi^d c_top(H (x) W) pi^*(eta). Degree mismatches give 0.
Rational asw_evaluate(const KuranishiData& k);

/// c_top(H (x) pi^*W) = sum_j c_j(W) xi^{w-j} on the total space of P(V).
GradedClass top_chern_twisted(const ProjBundleHandle& h, const BundleClass& w);

struct TorusAswResult {
  Rational value;
  std::vector<std::string> warnings;
};

/// asw_evaluate over torus_model(q) with the product of the listed odd
/// generators (1-based, in the given order) as insertion. A repeated
/// generator makes the insertion zero; the result is 0 with a warning.
TorusAswResult asw_with_torus_insertions(const BundleClass& v, const BundleClass& w, int d,
                                         const std::vector<int>& odd_insertion);

/// Exponent for the algebraic invariant: d_GT(C) + fbd.
int asw_exponent(const DimensionData& d);

struct CanonicalObstruction {
  int rank = 0;
  std::vector<BundleClass> factors;  // E (x) S^{m_i - 1}(C + N_i^*)
  BundleClass total;                 // Whitney sum of the factors
};

/// Obstruction bundle of the canonical algebraic family Kuranishi model for
/// multiplicities m_1..m_n: rank sum m_i(m_i+1)/2, total Chern class the
/// product over the levels' exact-sequence factors.
CanonicalObstruction canonical_obstruction(const std::vector<int>& multiplicities,
                                           const std::vector<BundleClass>& relative_tangents,
                                           const BundleClass& e);

}  // namespace famsw

#endif  // FAMSW_KURANISHI_HPP
