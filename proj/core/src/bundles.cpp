#include "famsw/bundles.hpp"

#include "famsw/errors.hpp"
#include "famsw/series.hpp"
#include "famsw/symmetric.hpp"

namespace famsw {

BundleClass::BundleClass(int rank, GradedClass total_chern)
    : rank_(rank), total_(std::move(total_chern)) {
  if (total_.constant_term() != 1) {
    throw Error(ErrorCode::VirtualRank, "total Chern class must start with 1");
  }
  for (const auto& [m, c] : total_.terms()) {
    if (total_.ambient()->degree(m) % 2 != 0) {
      throw Error(ErrorCode::WrongDegree, "Chern classes live in even degree");
    }
  }
}

BundleClass BundleClass::trivial(const Space& space, int rank) {
  return BundleClass(rank, GradedClass::one(space));
}

BundleClass BundleClass::line(const GradedClass& c1) {
  if (!c1.is_zero() && c1.homogeneous_degree() != 2) {
    throw Error(ErrorCode::WrongDegree, "first Chern class must have degree 2");
  }
  return BundleClass(1, GradedClass::one(c1.ambient()) + c1);
}

GradedClass BundleClass::chern(int i) const {
  if (i < 0) return GradedClass(ambient());
  return degree_part(total_, 2 * i);
}

std::vector<GradedClass> BundleClass::chern_classes() const {
  std::vector<GradedClass> out;
  for (int i = 1; i <= ambient()->complex_dimension(); ++i) out.push_back(chern(i));
  return out;
}

bool BundleClass::is_honest() const {
  if (rank_ < 0) return false;
  for (int i = rank_ + 1; i <= ambient()->complex_dimension(); ++i) {
    if (!chern(i).is_zero()) return false;
  }
  return true;
}

BundleClass whitney_sum(const BundleClass& e, const BundleClass& f) {
  return BundleClass(e.rank() + f.rank(), mul(e.total_chern(), f.total_chern()));
}

BundleClass virtual_difference(const BundleClass& e, const BundleClass& f) {
  return BundleClass(e.rank() - f.rank(), mul(e.total_chern(), inverse(f.total_chern())));
}

BundleClass dual(const BundleClass& e) {
  GradedClass out(e.ambient());
  for (int i = 0; i <= e.ambient()->complex_dimension(); ++i) {
    GradedClass ci = e.chern(i);
    out += i % 2 ? -ci : ci;
  }
  return BundleClass(e.rank(), out);
}

namespace {

// (1 + a)^n as a truncated series; n may be negative.
GradedClass one_plus_power(const GradedClass& a, int n) {
  const Space& space = a.ambient();
  GradedClass out = GradedClass::one(space);
  GradedClass apow = out;
  for (int k = 1; k <= space->complex_dimension(); ++k) {
    apow = mul(apow, a);
    if (apow.is_zero()) break;
    out += scale(binomial_general(n, k), apow);
  }
  return out;
}

}  // namespace

BundleClass tensor_line(const BundleClass& e, const BundleClass& line) {
  if (line.rank() != 1) throw Error(ErrorCode::NotALine, "tensor_line needs a rank-1 bundle");
  if (e.ambient() != line.ambient()) {
    throw Error(ErrorCode::AmbientMismatch, "bundles live over different spaces");
  }
  // c(E (x) L) = sum_i c_i(E) (1 + l)^{r - i}; valid for virtual E as well.
  const GradedClass lambda = line.chern(1);
  GradedClass out(e.ambient());
  for (int i = 0; i <= e.ambient()->complex_dimension(); ++i) {
    GradedClass ci = e.chern(i);
    if (ci.is_zero()) continue;
    out += mul(ci, one_plus_power(lambda, e.rank() - i));
  }
  return BundleClass(e.rank(), out);
}

BundleClass sym_power(const BundleClass& e, int k) {
  if (k < 0) throw Error(ErrorCode::RangeError, "negative symmetric power");
  if (e.rank() < 1 || !e.is_honest()) {
    throw Error(ErrorCode::VirtualInput, "symmetric powers need an honest bundle of rank >= 1");
  }
  const int r = e.rank();
  if (r > kMaxSymPowerRank || k > kMaxSymPowerDegree) {
    throw Error(ErrorCode::RankTooLarge, "symmetric power S^" + std::to_string(k) +
                                             " of a rank-" + std::to_string(r) + " bundle");
  }
  const Space& space = e.ambient();
  const int rank = static_cast<int>(binomial(k + r - 1, r - 1).get_si());
  const int n = space->complex_dimension();
  if (k == 0) return BundleClass::trivial(space, 1);

  // Power sums of the roots a.x of S^k, rewritten through e_i = c_i(E).
  const auto root_sums = symmetric::symmetric_power_power_sums(r, k, n);
  std::vector<GradedClass> chern;
  for (int i = 1; i <= r; ++i) chern.push_back(e.chern(i));
  std::vector<GradedClass> p;
  for (int j = 1; j <= n; ++j) {
    p.push_back(symmetric::substitute(symmetric::to_elementary(r, root_sums[j]), chern, space));
  }
  auto elementary = symmetric::elementary_from_power_sums(p, n, space);
  GradedClass total = GradedClass::one(space);
  for (auto& c : elementary) total += c;
  return BundleClass(rank, total);
}

BundleClass half_line(const GradedClass& a) {
  if (!a.is_zero() && a.homogeneous_degree() != 2) {
    throw Error(ErrorCode::WrongDegree, "half_line needs a homogeneous degree-2 class");
  }
  return BundleClass::line(scale(Rational(1, 2), a));
}

std::vector<GradedClass> power_sums(const BundleClass& e) {
  const int n = e.ambient()->complex_dimension();
  std::vector<GradedClass> c;
  for (int i = 1; i <= n; ++i) c.push_back(e.chern(i));
  return symmetric::power_sums_from_elementary(c, n, e.ambient());
}

GradedClass chern_character(const BundleClass& e) {
  const Space& space = e.ambient();
  GradedClass out = GradedClass::constant(space, e.rank());
  const auto p = power_sums(e);
  for (std::size_t k = 1; k <= p.size(); ++k) {
    out += scale(1 / Rational(factorial(static_cast<long>(k))), p[k - 1]);
  }
  return out;
}

GradedClass multiplicative_class(const BundleClass& e, const std::vector<Rational>& root_series) {
  const Space& space = e.ambient();
  const int n = space->complex_dimension();
  std::vector<Rational> f(root_series.begin(), root_series.end());
  f.resize(n + 1, 0);
  const auto q = series::log_series(f);
  // log prod f(x_i) = sum_k q_k p_k
  const auto p = power_sums(e);
  GradedClass log_class(space);
  for (int k = 1; k <= n; ++k) log_class += scale(q[k], p[k - 1]);
  return exp(log_class);
}

GradedClass todd(const BundleClass& e) {
  return multiplicative_class(e, series::todd_root_series(e.ambient()->complex_dimension()));
}

GradedClass segre(const BundleClass& e) { return inverse(e.total_chern()); }

}  // namespace famsw
