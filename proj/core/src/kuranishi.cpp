#include "famsw/kuranishi.hpp"

#include <set>

#include "famsw/errors.hpp"
#include "famsw/surfaces.hpp"

namespace famsw {

KuranishiData::KuranishiData(BundleClass kernel, BundleClass cokernel, int d)
    : KuranishiData(kernel, std::move(cokernel), d, GradedClass::one(kernel.ambient())) {}

KuranishiData::KuranishiData(BundleClass kernel, BundleClass cokernel, int d, GradedClass eta)
    : base(kernel.ambient()), v(std::move(kernel)), w(std::move(cokernel)), exponent(d), insertion(std::move(eta)) {
  if (w.ambient() != base || insertion.ambient() != base) {
    throw Error(ErrorCode::AmbientMismatch, "Kuranishi data must live on one base");
  }
}

GradedClass top_chern_twisted(const ProjBundleHandle& h, const BundleClass& w) {
  GradedClass out(h.total);
  for (int j = 0; j <= w.rank(); ++j) {
    out += mul(pullback(h, w.chern(j)), power(h.xi, w.rank() - j));
  }
  return out;
}

Rational asw_evaluate(const KuranishiData& k) {
  if (k.v.rank() < 1 || !k.v.is_honest()) {
    throw Error(ErrorCode::VirtualRank, "V must be an honest bundle of rank >= 1");
  }
  if (!k.w.is_honest()) throw Error(ErrorCode::VirtualRank, "W must be an honest bundle");
  if (k.exponent < 0) return 0;
  ProjBundleHandle h = projective_bundle(k.v);
  GradedClass integrand = mul(power(h.xi, k.exponent), top_chern_twisted(h, k.w));
  integrand = mul(integrand, pullback(h, k.insertion));
  return integrate(h.total, integrand);
}

TorusAswResult asw_with_torus_insertions(const BundleClass& v, const BundleClass& w, int d,
                                         const std::vector<int>& odd_insertion) {
  const Space& base = v.ambient();
  TorusAswResult result;
  std::set<int> seen;
  GradedClass eta = GradedClass::one(base);
  for (int idx : odd_insertion) {
    if (idx < 1 || static_cast<std::size_t>(idx) > base->generator_count() ||
        base->generators()[idx - 1].parity != Parity::Odd) {
      throw Error(ErrorCode::RangeError, "insertion index " + std::to_string(idx) + " is not an odd generator");
    }
    if (!seen.insert(idx).second) {
      result.warnings.push_back(std::string(to_string(ErrorCode::RepeatedOddGenerator)) + ": t" +
                                std::to_string(idx) + " appears twice; the insertion vanishes");
    }
    eta = mul(eta, GradedClass::generator(base, static_cast<std::size_t>(idx - 1)));
  }
  result.value = asw_evaluate(KuranishiData(v, w, d, eta));
  return result;
}

int asw_exponent(const DimensionData& d) {
  Rational e = sw_dimension(d, DimensionKind::GromovTaubes) + d.fbd;
  if (!is_integer(e)) throw Error(ErrorCode::RangeError, "expected dimension is not an integer");
  return static_cast<int>(e.get_num().get_si());
}

CanonicalObstruction canonical_obstruction(const std::vector<int>& multiplicities,
                                           const std::vector<BundleClass>& relative_tangents,
                                           const BundleClass& e) {
  if (multiplicities.size() != relative_tangents.size()) {
    throw Error(ErrorCode::ShapeMismatch, "one relative tangent bundle per level is required");
  }
  if (e.rank() != 1) throw Error(ErrorCode::NotALine, "E must be a line bundle");
  const Space& base = e.ambient();
  CanonicalObstruction out{0, {}, BundleClass::trivial(base, 0)};
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    const int m = multiplicities[i];
    if (m < 1) throw Error(ErrorCode::BadMultiplicity, "multiplicity " + std::to_string(m) + " < 1");
    if (relative_tangents[i].ambient() != base) {
      throw Error(ErrorCode::AmbientMismatch, "all levels must be pulled back to one base");
    }
    BundleClass inner = whitney_sum(BundleClass::trivial(base, 1), dual(relative_tangents[i]));
    BundleClass factor = tensor_line(sym_power(inner, m - 1), e);
    out.rank += m * (m + 1) / 2;
    out.total = whitney_sum(out.total, factor);
    out.factors.push_back(std::move(factor));
  }
  return out;
}

}  // namespace famsw
