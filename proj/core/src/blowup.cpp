#include "famsw/blowup.hpp"

#include "famsw/errors.hpp"
#include "famsw/surfaces.hpp"

namespace famsw {

std::string_view to_string(Variant v) { return v == Variant::Smooth ? "smooth" : "algebraic"; }

FamilyBlowupScenario::FamilyBlowupScenario(Space base_space, GradedClass l0_class, BundleClass normal_bundle,
                                           int coefficient, Variant v)
    : base(std::move(base_space)),
      l0(std::move(l0_class)),
      normal(std::move(normal_bundle)),
      m(coefficient),
      variant(v),
      insertion(GradedClass::one(base)) {
  if (l0.ambient() != base || normal.ambient() != base) {
    throw Error(ErrorCode::AmbientMismatch, "scenario data must live on the base");
  }
  if (normal.rank() != 2 || !normal.is_honest()) {
    throw Error(ErrorCode::VirtualRank, "the normal bundle of the section must be an honest rank-2 bundle");
  }
  if (!l0.is_zero() && l0.homogeneous_degree() != 2) {
    throw Error(ErrorCode::WrongDegree, "c_1(L_0) must be a degree-2 class");
  }
}

int spin_c_coefficient(int multiplicity) { return -(2 * multiplicity + 1); }

int curve_multiplicity(int spin_c_m) {
  if (spin_c_m % 2 == 0) throw Error(ErrorCode::EvenM, "spin-c coefficient must be odd");
  int p = (-spin_c_m - 1) / 2;
  if (p < 0) throw Error(ErrorCode::RangeError, "m > -1 does not come from a curve multiplicity");
  return p;
}

namespace {

void require_odd(int m) {
  if (m % 2 == 0) throw Error(ErrorCode::EvenM, "m = " + std::to_string(m) + " is even");
}

int sym_degree_for(int m) {
  int k = (std::abs(m) - 3) / 2;
  if (k > kMaxSymPowerDegree) {
    throw Error(ErrorCode::RankBound, "|m| = " + std::to_string(std::abs(m)) + " exceeds the supported range");
  }
  return k;
}

GradedClass square_root_class(const FamilyBlowupScenario& s) {
  return scale(Rational(1, 2), s.l0 - s.normal.chern(1));
}

}  // namespace

BundleClass obstruction_smooth(const FamilyBlowupScenario& s) {
  require_odd(s.m);
  if (std::abs(s.m) == 1) return BundleClass::trivial(s.base, 0);
  const int k = sym_degree_for(s.m);
  BundleClass trivial = BundleClass::trivial(s.base, 1);
  BundleClass inner = s.m > 0 ? whitney_sum(s.normal, trivial) : whitney_sum(dual(s.normal), trivial);
  return tensor_line(sym_power(inner, k), half_line(s.l0 - s.normal.chern(1)));
}

BundleClass obstruction_algebraic(const FamilyBlowupScenario& s, const BundleClass& e_restricted) {
  if (e_restricted.rank() != 1) throw Error(ErrorCode::NotALine, "E restricted to the section must be a line");
  if (e_restricted.ambient() != s.base) throw Error(ErrorCode::AmbientMismatch, "E must live on the base");
  if (s.m == 0 || s.m == 1) return BundleClass::trivial(s.base, 0);
  BundleClass trivial = BundleClass::trivial(s.base, 1);
  const int k = s.m >= 2 ? s.m - 2 : -s.m - 1;
  if (k > kMaxSymPowerDegree) throw Error(ErrorCode::RankBound, "|m| exceeds the supported range");
  BundleClass inner = s.m >= 2 ? whitney_sum(trivial, s.normal) : whitney_sum(trivial, dual(s.normal));
  return tensor_line(sym_power(inner, k), e_restricted);
}

std::vector<ExpansionTerm> expand_formula(const FamilyBlowupScenario& s) {
  if (s.insertion.ambient() != s.base) throw Error(ErrorCode::AmbientMismatch, "insertion must live on the base");
  auto eta_degree = s.insertion.homogeneous_degree();
  if (!s.insertion.is_zero() && !eta_degree) {
    throw Error(ErrorCode::WrongDegree, "insertion must be homogeneous");
  }
  const int deg_eta = eta_degree.value_or(0);
  BundleClass w = s.variant == Variant::Smooth
                      ? obstruction_smooth(s)
                      : obstruction_algebraic(s, s.exceptional_restriction.value_or(BundleClass::trivial(s.base, 1)));
  std::vector<ExpansionTerm> out;
  out.push_back({0, s.insertion, deg_eta});
  for (int i = 1; i <= w.rank(); ++i) {
    GradedClass cls = mul(s.insertion, w.chern(i));
    if (cls.is_zero()) continue;
    out.push_back({i, cls, 2 * i + deg_eta});
  }
  return out;
}

CrosscheckReport grr_crosscheck(const FamilyBlowupScenario& s) {
  require_odd(s.m);
  sym_degree_for(s.m);
  BundleClass v = whitney_sum(s.normal, BundleClass::trivial(s.base, 1));
  ProjBundleHandle h = projective_bundle(v);
  GradedClass td = todd(relative_tangent(h));
  GradedClass root = pullback(h, square_root_class(s));

  CrosscheckReport report{GradedClass(s.base), GradedClass(s.base)};
  BundleClass w = obstruction_smooth(s);
  int n;
  if (s.m < 0) {
    n = (-s.m - 3) / 2;
    report.lhs = chern_character(w);
  } else {
    // Relative Serre duality: compare the dual side.
    n = (s.m - 3) / 2;
    root = -root;
    report.lhs = chern_character(dual(w));
  }
  GradedClass integrand = mul(td, exp(root + scale(n, h.xi)));
  report.rhs = pushforward(h, integrand);
  report.equal = (report.lhs - report.rhs).is_zero();
  report.rank = static_cast<int>(report.rhs.constant_term().get_num().get_si());
  return report;
}

std::string_view to_string(DimensionKind k) {
  switch (k) {
    case DimensionKind::SpinC: return "spin-c";
    case DimensionKind::GromovTaubes: return "gromov-taubes";
    case DimensionKind::Family: return "family";
    case DimensionKind::AlgebraicFamily: return "algebraic-family";
  }
  return "";
}

DimensionKind parse_dimension_kind(std::string_view s) {
  for (auto k : {DimensionKind::SpinC, DimensionKind::GromovTaubes, DimensionKind::Family,
                 DimensionKind::AlgebraicFamily}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown dimension kind '" + std::string(s) + "'");
}

Rational sw_dimension(const DimensionData& d, DimensionKind kind) {
  if (d.fbd < 0 || d.fbd > d.pg) {
    throw Error(ErrorCode::RangeError, "fbd = " + std::to_string(d.fbd) + " outside [0, pg]");
  }
  const Rational gt = (d.c2_number - d.ck) / 2;
  const Rational spin_c = (4 * d.c2_number - 4 * d.ck + d.k2 - 2 * d.chi - 3 * d.sigma) / 4;
  switch (kind) {
    case DimensionKind::SpinC: return spin_c;
    case DimensionKind::GromovTaubes: return gt;
    case DimensionKind::Family: return Rational(d.dim_b) + spin_c;
    case DimensionKind::AlgebraicFamily: return gt + d.fbd + Rational(d.dim_b) / 2;
  }
  return 0;
}

DimensionData blowup_dimension_data(const DimensionData& d, int m) {
  require_odd(m);
  const Rational j(Integer((m + 1) / 2));
  DimensionData out = d;
  out.c2_number = d.c2_number - j * j;
  out.ck = d.ck - j;
  out.k2 = d.k2 - 1;
  out.chi = d.chi + 1;
  out.sigma = d.sigma - 1;
  return out;
}

Rational family_dimension_drop(const DimensionData& d, int m) {
  return sw_dimension(blowup_dimension_data(d, m), DimensionKind::Family) -
         sw_dimension(d, DimensionKind::Family);
}

Rational existence_slack(const Rational& c2_number, const Rational& ck, const std::vector<int>& multiplicities) {
  Rational slack = (c2_number - ck) / 2;
  for (int m : multiplicities) slack -= Rational(m * m - m) / 2;
  return slack;
}

bool existence_check(const Rational& c2_number, const Rational& ck, const std::vector<int>& multiplicities) {
  return existence_slack(c2_number, ck, multiplicities) >= 0;
}

}  // namespace famsw
