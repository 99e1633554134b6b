#include "famsw/random.hpp"

#include "famsw/surfaces.hpp"

namespace famsw::random {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

GradedClass homogeneous(const Space& space, int degree, Rng& rng, int bound) {
  GradedClass out(space);
  for (const Monomial& m : space->basis()) {
    if (space->degree(m) != degree) continue;
    const int c = uniform_int(rng, -bound, bound);
    if (c != 0) out += GradedClass::monomial(space, m, c);
  }
  return out;
}

GradedClass mixed(const Space& space, Rng& rng, int bound) {
  GradedClass out(space);
  for (int deg = 0; deg <= space->top_degree(); ++deg) out += homogeneous(space, deg, rng, bound);
  return out;
}

BundleClass bundle(const Space& space, int rank, Rng& rng, int bound) {
  GradedClass total = GradedClass::one(space);
  const int top = std::min(rank, space->complex_dimension());
  for (int i = 1; i <= top; ++i) total += homogeneous(space, 2 * i, rng, bound);
  return BundleClass(rank, total);
}

BundleClass split_bundle(const Space& space, int rank, Rng& rng, std::vector<GradedClass>* roots, int bound) {
  BundleClass out = BundleClass::trivial(space, 0);
  for (int i = 0; i < rank; ++i) {
    const GradedClass c1 = homogeneous(space, 2, rng, bound);
    if (roots) roots->push_back(c1);
    out = whitney_sum(out, BundleClass::line(c1));
  }
  return out;
}

Space surface(Rng& rng) {
  SurfaceData d;
  const int n = uniform_int(rng, 1, 2);
  d.intersection.assign(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) {
    d.basis.push_back("x" + std::to_string(i + 1));
    d.canonical.push_back(uniform_int(rng, -3, 3));
    for (int j = i; j < n; ++j) {
      d.intersection[i][j] = uniform_int(rng, -3, 3);
      d.intersection[j][i] = d.intersection[i][j];
    }
  }
  d.c2 = uniform_int(rng, -5, 30);
  return surface_model(d).space;
}

std::vector<Space> bases(Rng& rng) {
  return {point_space(),           surface_model(cp2_data()).space, surface_model(k3_data(2)).space,
          torus_model(1),          torus_model(2),                  surface(rng)};
}

}  // namespace famsw::random
