#ifndef FAMSW_SURFACES_HPP
#define FAMSW_SURFACES_HPP

#include <string>
#include <vector>

#include "famsw/bundles.hpp"
#include "famsw/ring.hpp"

namespace famsw {

/// Numerical data of a compact complex surface: an H^2 basis with its
/// intersection form, the canonical class, and c_2 of the tangent bundle.
/// Noether's formula is not enforced; see noether_defect().
struct SurfaceData {
  std::vector<std::string> basis;
  std::vector<std::vector<Rational>> intersection;  // Q_ij
  std::vector<Rational> canonical;                  // coordinates of c_1(K)
  Rational c2 = 0;
  int pg = 0;
  int q = 0;
};

struct SurfaceModel {
  Space space;
  BundleClass tangent;
};

/// Generators x_i (degree 2) and pt (degree 4) with x_i x_j -> Q_ij pt.
/// The point class keeps degenerate forms (e.g. Q = [0]) integrable.
SurfaceModel surface_model(const SurfaceData& data);

/// Class sum_i coords_i x_i in a surface model.
GradedClass surface_class(const SurfaceModel& model, const std::vector<Rational>& coords);

/// 12 chi(O) - (K^2 + c_2) computed from pg and q; nonzero flags formal data.
Rational noether_defect(const SurfaceData& data);

SurfaceData cp2_data();
/// K3 with a single basis class of self-intersection c_squared.
SurfaceData k3_data(const Rational& c_squared = 0);

/// Exterior algebra on 2q odd degree-1 generators t1..t{2q}: cohomology of
/// the Picard torus. q = 0 is the point.
Space torus_model(int q);

/// Projective bundle of lines P(V) -> B with xi = c_1(O(1)).
///
/// The total space adds xi with xi^r -> -sum_{i>=1} c_i(V) xi^{r-i} and
/// integrates xi^{r-1} times a top base class to that class's base
/// integral, so pi_*(xi^{r-1}) = 1. The blown-up side's exceptional class
/// restricts to -xi (see exceptional_class()).
struct ProjBundleHandle {
  Space total;
  Space base;
  int rank = 0;
  std::string xi_name;
  BundleClass bundle;      // V over the base
  GradedClass xi;          // hyperplane class in total
  GradedClass base_chern;  // c(V) lifted to total
};

ProjBundleHandle projective_bundle(const BundleClass& v);

GradedClass pullback(const ProjBundleHandle& h, const GradedClass& a);
BundleClass pullback(const ProjBundleHandle& h, const BundleClass& e);
/// Fiber integration: the coefficient of xi^{r-1} in the normal form.
GradedClass pushforward(const ProjBundleHandle& h, const GradedClass& a);

/// O(1) on the total space.
BundleClass hyperplane_line(const ProjBundleHandle& h);
/// T_{P/B} from 0 -> C -> H (x) pi^*V -> T_{P/B} -> 0.
BundleClass relative_tangent(const ProjBundleHandle& h);
/// Restriction of the exceptional divisor to itself, E|_E = O(-1): -xi.
GradedClass exceptional_class(const ProjBundleHandle& h);

/// Class of a point of the base (any top-degree class integrating to 1).
GradedClass fundamental_point(const Space& space);

}  // namespace famsw

#endif  // FAMSW_SURFACES_HPP
