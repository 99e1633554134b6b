#ifndef FAMSW_RANDOM_HPP
#define FAMSW_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "famsw/bundles.hpp"
#include "famsw/ring.hpp"

/// Seeded generators of random classes, bundles and bases for property
/// checks.
namespace famsw::random {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);

/// Integer combination of basis monomials of one degree, coefficients in
/// [-bound, bound].
GradedClass homogeneous(const Space& space, int degree, Rng& rng, int bound = 3);

/// Random class with terms in every degree up to the top.
GradedClass mixed(const Space& space, Rng& rng, int bound = 3);

/// Honest bundle: c_i random of degree 2i for 1 <= i <= min(rank, dim).
BundleClass bundle(const Space& space, int rank, Rng& rng, int bound = 3);

/// Whitney sum of random lines; the lines' first Chern classes are
/// appended to `roots` when given.
BundleClass split_bundle(const Space& space, int rank, Rng& rng, std::vector<GradedClass>* roots = nullptr,
                         int bound = 3);

/// Surface model with a random symmetric 1x1 or 2x2 intersection form.
Space surface(Rng& rng);

/// Point, CP^2, K3, torus(1), torus(2) and one random surface.
std::vector<Space> bases(Rng& rng);

}  // namespace famsw::random

#endif  // FAMSW_RANDOM_HPP
