#ifndef FAMSW_RING_HPP
#define FAMSW_RING_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "famsw/rational.hpp"

namespace famsw {

enum class Parity { Even, Odd };

struct Generator {
  std::string name;
  int degree = 2;  // cohomological (real) degree
  Parity parity = Parity::Even;
};

/// Dense exponent vector over the generators of one SpaceModel. Generators
/// are written in index order; odd generators carry exponent 0 or 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {}

  static Monomial one(std::size_t generator_count) {
    return Monomial(std::vector<int>(generator_count, 0));
  }

  const std::vector<int>& exponents() const { return exps_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::size_t size() const { return exps_.size(); }
  bool is_one() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

using Terms = std::map<Monomial, Rational>;

/// A rewriting rule lhs -> rhs. The right side must be homogeneous of the
/// same degree as lhs.
struct Rule {
  Monomial lhs;
  Terms rhs;
};

/// Classes whose degree restricted to `generators` exceeds `max_degree`
/// vanish. Projective bundles inherit the base's bound this way, so base
/// monomials above the base dimension die even when the total space is
/// larger.
struct Truncation {
  std::vector<std::size_t> generators;
  int max_degree = 0;
};

/// Koszul-signed product of monomials over a generator list: returns
/// (sign, product), sign 0 when an odd generator repeats.
std::pair<int, Monomial> koszul_multiply(const std::vector<Generator>& generators,
                                         const Monomial& a, const Monomial& b);

class SpaceModel;
using Space = std::shared_ptr<const SpaceModel>;

/// A presented graded-commutative ring truncated above its top degree.
///
/// Construction enumerates every monomial up to the top degree and
/// normalizes it along every applicable first rewriting step; a rule set
/// that loops raises NonTerminating and one whose choices disagree raises
/// NonConfluent. The resulting normal-form table is immutable, so products
/// are table lookups.
class SpaceModel {
 public:
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<Truncation>& truncations() const { return truncations_; }
  int complex_dimension() const { return complex_dimension_; }
  int top_degree() const { return 2 * complex_dimension_; }
  const std::map<Monomial, Rational>& integrals() const { return integrals_; }

  std::size_t generator_count() const { return generators_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  int degree(const Monomial& m) const;

  /// False when `m` is killed by degree truncation or an odd square.
  bool in_range(const Monomial& m) const;

  /// Normal form of a monomial; empty when the monomial reduces to zero.
  const Terms& normal_form(const Monomial& m) const;

  /// Monomials that are their own normal form, i.e. a Q-basis of the ring.
  std::vector<Monomial> basis() const;
  std::vector<int> betti_numbers() const;

  /// Koszul-signed product of two monomials: returns (sign, product) with
  /// sign 0 when an odd generator repeats.
  std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b) const;

  std::string format(const Monomial& m) const;

  friend Space make_space(std::vector<Generator> generators, std::vector<Rule> rules,
                          int complex_dimension, std::map<Monomial, Rational> integrals,
                          std::vector<Truncation> truncations);

 private:
  SpaceModel() = default;
  void validate_and_tabulate();

  std::vector<Generator> generators_;
  std::vector<Rule> rules_;
  std::vector<Truncation> truncations_;
  int complex_dimension_ = 0;
  std::map<Monomial, Rational> integrals_;
  std::map<Monomial, Terms> normal_forms_;
};

Space make_space(std::vector<Generator> generators, std::vector<Rule> rules,
                 int complex_dimension, std::map<Monomial, Rational> integrals,
                 std::vector<Truncation> truncations = {});

/// The one-point model: no generators, dimension 0, integral of 1 is 1.
Space point_space();

/// Sparse rational combination of normal-form monomials in one SpaceModel.
class GradedClass {
 public:
  explicit GradedClass(Space ambient) : ambient_(std::move(ambient)) {}
  /// Normalizes arbitrary (possibly non-normal) terms.
  GradedClass(Space ambient, const Terms& terms);

  static GradedClass constant(Space ambient, const Rational& value);
  static GradedClass one(Space ambient) { return constant(std::move(ambient), 1); }
  static GradedClass generator(Space ambient, std::string_view name);
  static GradedClass generator(Space ambient, std::size_t index);
  static GradedClass monomial(Space ambient, const Monomial& m, const Rational& coefficient = 1);

  const Space& ambient() const { return ambient_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational constant_term() const;

  /// Degree when every term has the same degree; nullopt for zero or mixed.
  std::optional<int> homogeneous_degree() const;
  int max_degree() const;

  std::string to_string() const;

  GradedClass operator-() const;
  GradedClass& operator+=(const GradedClass& other);
  GradedClass& operator-=(const GradedClass& other);
  GradedClass& operator*=(const GradedClass& other);
  GradedClass& operator*=(const Rational& r);

  friend bool operator==(const GradedClass& a, const GradedClass& b);

 private:
  friend GradedClass mul(const GradedClass&, const GradedClass&);
  friend GradedClass add(const GradedClass&, const GradedClass&);
  friend GradedClass scale(const Rational&, const GradedClass&);
  friend GradedClass degree_part(const GradedClass&, int);

  void add_term(const Monomial& m, const Rational& c);

  Space ambient_;
  Terms terms_;
};

GradedClass mul(const GradedClass& a, const GradedClass& b);
GradedClass add(const GradedClass& a, const GradedClass& b);
GradedClass scale(const Rational& r, const GradedClass& a);
GradedClass degree_part(const GradedClass& a, int degree);
Rational integrate(const Space& space, const GradedClass& a);

GradedClass power(const GradedClass& a, int n);
/// exp of a class without constant term; terminates by truncation.
GradedClass exp(const GradedClass& a);
/// Multiplicative inverse of a class with nonzero constant term.
GradedClass inverse(const GradedClass& a);

inline GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
inline GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
inline GradedClass operator*(const GradedClass& a, const GradedClass& b) { return mul(a, b); }
inline GradedClass operator*(const Rational& r, const GradedClass& a) { return scale(r, a); }

void require_same_ambient(const GradedClass& a, const GradedClass& b);

/// "3*h^2 - 1/2*h + 1" style rendering, lowest degree first; parseable by
/// parse_class().
std::string format_terms(const SpaceModel& space, const Terms& terms);

}  // namespace famsw

#endif  // FAMSW_RING_HPP
