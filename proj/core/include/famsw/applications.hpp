#ifndef FAMSW_APPLICATIONS_HPP
#define FAMSW_APPLICATIONS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "famsw/rational.hpp"
#include "famsw/surfaces.hpp"

namespace famsw {

/// int_M c_2(E_C (x) S^{p-1}(T*M + C)): the factor multiplying SW(L) in the
/// one-point blowup formula for curves with a point of multiplicity p.
Rational severi_one_point(const SurfaceData& surface, const std::vector<Rational>& c_coords, int p);

/// One-node count on CP^2 for C = dH; equals 3(d-1)^2.
Rational nodal_cp2(int d);

/// One-node count on a K3 with a class of square c_squared.
Rational k3_twistor_count(const Rational& c_squared);

/// Todd genus int_M Todd_2(T_M) = (K^2 + c_2)/12.
Rational todd_genus(const SurfaceData& surface);

/// Chern numbers a universal polynomial is evaluated at.
struct ChernNumbers {
  Rational c2_number;  // C^2
  Rational ck;         // C.K
  Rational k2;         // K^2
  Rational c2;         // c_2(M)
};

/// Polynomial in (C^2, C.K, K^2, c_2) of total degree <= 2; keys are
/// exponent vectors in that variable order.
struct UniversalPolynomial {
  int p = 1;
  std::map<std::array<int, 4>, Rational> coefficients;
  bool verified = false;

  Rational evaluate(const ChernNumbers& n) const;
  /// Names "C2", "CK", "K2", "c2"; products joined by '*', constant "1".
  std::map<std::string, Rational> named_coefficients() const;
};

inline constexpr int kMaxUniversalMultiplicity = 8;

/// Interpolates severi_one_point over formal two-class surfaces on the
/// degree-2 simplex grid, then re-checks five off-grid points.
UniversalPolynomial universal_poly(int p);

/// Formal surface with basis (C, K) realizing the given Chern numbers.
SurfaceData formal_surface(const ChernNumbers& n);

}  // namespace famsw

#endif  // FAMSW_APPLICATIONS_HPP
