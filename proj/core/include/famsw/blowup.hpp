#ifndef FAMSW_BLOWUP_HPP
#define FAMSW_BLOWUP_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "famsw/bundles.hpp"
#include "famsw/ring.hpp"

namespace famsw {

enum class Variant { Smooth, Algebraic };

std::string_view to_string(Variant v);

/// Blowing up a section s of a family X -> B.
///
/// `m` is the coefficient of the exceptional class: an odd spin-c
/// coefficient for Variant::Smooth, and a curve-class coefficient for
/// Variant::Algebraic, where a curve of multiplicity p at the section has
/// m = -p. The two are related by m_smooth = -(2p + 1), see
/// spin_c_coefficient().
struct FamilyBlowupScenario {
  Space base;
  GradedClass l0;            // c_1(L_0), the determinant line restricted to the section
  BundleClass normal;        // N_s, rank 2
  int m = 1;
  Variant variant = Variant::Smooth;
  GradedClass insertion;     // eta; one() by default
  std::optional<BundleClass> exceptional_restriction;  // E restricted to the section (algebraic)

  FamilyBlowupScenario(Space base_space, GradedClass l0_class, BundleClass normal_bundle, int coefficient,
                       Variant v = Variant::Smooth);
};

int spin_c_coefficient(int multiplicity);
/// Inverse of spin_c_coefficient(); throws EvenM unless m = -(2p+1) with p >= 0.
int curve_multiplicity(int spin_c_m);

/// W_m of the smooth formula. Rank (m^2 - 1)/8.
BundleClass obstruction_smooth(const FamilyBlowupScenario& s);
/// E (x) S^{m-2}(C + N) for m >= 2, E (x) S^{-m-1}(C + N*) for m <= -1.
BundleClass obstruction_algebraic(const FamilyBlowupScenario& s, const BundleClass& e_restricted);

struct ExpansionTerm {
  int index = 0;
  GradedClass insertion;  // eta . c_i(W)
  int degree = 0;         // 2i + deg eta
};

/// Summands of sum_i FSW_B(eta . c_i(W), L). Zero classes are omitted
/// except the i = 0 term, which is always eta.
std::vector<ExpansionTerm> expand_formula(const FamilyBlowupScenario& s);

struct CrosscheckReport {
  GradedClass lhs;
  GradedClass rhs;
  bool equal = false;
  int rank = 0;
};

/// Compares ch of the obstruction bundle with the fiber integral
/// pi_*(Todd(T_{P/B}) ch(sqrt(L_0 det N^{-1}) H^n)) over P(N + C).
///
/// For m <= -3, n = (-m-3)/2 and the pushforward is ch(W_m). For m >= 3 the
/// Serre-dual side is used: n = (m-3)/2 with the inverse square-root line,
/// compared against ch(W_m^*).
CrosscheckReport grr_crosscheck(const FamilyBlowupScenario& s);

enum class DimensionKind { SpinC, GromovTaubes, Family, AlgebraicFamily };

std::string_view to_string(DimensionKind k);
DimensionKind parse_dimension_kind(std::string_view s);

/// Intersection data of a curve class C on a surface M, with base data for
/// families. dim_b is the real dimension of B; chi and sigma are the
/// Euler characteristic and signature of the fiber.
struct DimensionData {
  Rational c2_number = 0;  // C.C
  Rational ck = 0;         // C.K
  Rational k2 = 0;         // K.K
  Rational chi = 0;
  Rational sigma = 0;
  int pg = 0;
  int q = 0;
  int fbd = 0;
  int dim_b = 0;
};

/// spin-c: ((2C-K)^2 - 2chi - 3sigma)/4; gromov-taubes: (C^2 - C.K)/2;
/// family: dim_R B + spin-c; algebraic-family: gromov-taubes + fbd + dim_C B.
Rational sw_dimension(const DimensionData& d, DimensionKind kind);

/// Data for C + ((m+1)/2) E on the blowup, whose spin-c class is L + mE.
DimensionData blowup_dimension_data(const DimensionData& d, int m);

/// Family dimension of L + mE minus that of L; equals -(m^2-1)/4.
Rational family_dimension_drop(const DimensionData& d, int m);

/// (C^2 - C.K)/2 - sum (m_i^2 - m_i)/2.
Rational existence_slack(const Rational& c2_number, const Rational& ck, const std::vector<int>& multiplicities);
bool existence_check(const Rational& c2_number, const Rational& ck, const std::vector<int>& multiplicities);

}  // namespace famsw

#endif  // FAMSW_BLOWUP_HPP
