#include "famsw/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "famsw/errors.hpp"

namespace famsw {

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

std::optional<std::size_t> SpaceModel::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

int SpaceModel::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < generators_.size(); ++i) d += m[i] * generators_[i].degree;
  return d;
}

bool SpaceModel::in_range(const Monomial& m) const {
  if (degree(m) > top_degree()) return false;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].parity == Parity::Odd && m[i] > 1) return false;
  }
  for (const auto& t : truncations_) {
    int d = 0;
    for (auto g : t.generators) d += m[g] * generators_[g].degree;
    if (d > t.max_degree) return false;
  }
  return true;
}

std::pair<int, Monomial> koszul_multiply(const std::vector<Generator>& generators,
                                         const Monomial& a, const Monomial& b) {
  std::vector<int> out(generators.size());
  int swaps = 0;
  int odd_in_a_above = 0;
  // Walk generators from the top so that, on reaching b's odd generator j,
  // odd_in_a_above counts a's odd generators with index > j.
  for (std::size_t k = generators.size(); k-- > 0;) {
    out[k] = a[k] + b[k];
    if (generators[k].parity == Parity::Odd) {
      if (a[k] && b[k]) return {0, Monomial(std::move(out))};
      if (b[k]) swaps += odd_in_a_above;
      if (a[k]) ++odd_in_a_above;
    }
  }
  return {swaps % 2 ? -1 : 1, Monomial(std::move(out))};
}

std::pair<int, Monomial> SpaceModel::multiply(const Monomial& a, const Monomial& b) const {
  return koszul_multiply(generators_, a, b);
}

std::string SpaceModel::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += generators_[i].name;
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

const Terms& SpaceModel::normal_form(const Monomial& m) const {
  static const Terms zero;
  auto it = normal_forms_.find(m);
  return it == normal_forms_.end() ? zero : it->second;
}

std::vector<Monomial> SpaceModel::basis() const {
  std::vector<Monomial> out;
  for (const auto& [m, nf] : normal_forms_) {
    if (nf.size() == 1 && nf.begin()->first == m && nf.begin()->second == 1) out.push_back(m);
  }
  // By degree, then with earlier generators first (1, t1, t2, t1*t2, ...).
  std::stable_sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    const int da = degree(a);
    const int db = degree(b);
    return da != db ? da < db : b < a;
  });
  return out;
}

std::vector<int> SpaceModel::betti_numbers() const {
  std::vector<int> out(top_degree() + 1, 0);
  for (const auto& m : basis()) ++out[degree(m)];
  return out;
}

namespace {

void enumerate(const SpaceModel& s, std::size_t index, std::vector<int>& exps, int budget,
               std::vector<Monomial>& out) {
  const auto& gens = s.generators();
  if (index == gens.size()) {
    Monomial m(exps);
    if (s.in_range(m)) out.push_back(std::move(m));
    return;
  }
  const auto& g = gens[index];
  int max_exp = g.parity == Parity::Odd ? 1 : budget / g.degree;
  for (int e = 0; e <= max_exp && e * g.degree <= budget; ++e) {
    exps[index] = e;
    enumerate(s, index + 1, exps, budget - e * g.degree, out);
  }
  exps[index] = 0;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  std::vector<int> e(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) e[i] = b[i] - a[i];
  return Monomial(std::move(e));
}

void accumulate(Terms& into, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

class Normalizer {
 public:
  explicit Normalizer(const SpaceModel& s) : s_(s) {}

  const Terms& run(const Monomial& m) {
    if (auto it = done_.find(m); it != done_.end()) return it->second;
    if (!s_.in_range(m)) return zero_;
    if (!active_.insert(m).second) {
      throw Error(ErrorCode::NonTerminating, "rewriting loops at monomial " + s_.format(m));
    }
    std::optional<Terms> result;
    for (const auto& rule : s_.rules()) {
      if (!divides(rule.lhs, m)) continue;
      Terms step = apply(rule, m);
      if (!result) {
        result = std::move(step);
      } else if (*result != step) {
        throw Error(ErrorCode::NonConfluent,
                    "two rewriting orders disagree on monomial " + s_.format(m));
      }
    }
    if (!result) result = Terms{{m, Rational(1)}};
    active_.erase(m);
    return done_.emplace(m, std::move(*result)).first->second;
  }

  std::map<Monomial, Terms> take() { return std::move(done_); }

 private:
  Terms apply(const Rule& rule, const Monomial& m) {
    Monomial rest = quotient(m, rule.lhs);
    const int sigma = s_.multiply(rule.lhs, rest).first;
    Terms out;
    for (const auto& [t, c] : rule.rhs) {
      auto [sign, product] = s_.multiply(t, rest);
      if (sign == 0) continue;
      const Terms nf = run(product);
      for (const auto& [n, cn] : nf) accumulate(out, n, Rational(sigma * sign) * c * cn);
    }
    return out;
  }

  const SpaceModel& s_;
  std::map<Monomial, Terms> done_;
  std::set<Monomial> active_;
  Terms zero_;
};

}  // namespace

void SpaceModel::validate_and_tabulate() {
  const std::size_t n = generators_.size();
  std::set<std::string> names;
  for (const auto& g : generators_) {
    if (g.name.empty()) throw Error(ErrorCode::InvalidGenerator, "empty generator name");
    if (!names.insert(g.name).second) {
      throw Error(ErrorCode::DuplicateGenerator, "generator '" + g.name + "' declared twice");
    }
    if (g.degree <= 0) {
      throw Error(ErrorCode::InvalidGenerator, "generator '" + g.name + "' must have positive degree");
    }
  }
  if (complex_dimension_ < 0) {
    throw Error(ErrorCode::InvalidGenerator, "negative complex dimension");
  }
  for (auto& t : truncations_) {
    for (auto g : t.generators) {
      if (g >= n) throw Error(ErrorCode::InvalidGenerator, "truncation names unknown generator");
    }
  }
  for (auto& rule : rules_) {
    if (rule.lhs.size() != n || rule.lhs.is_one()) {
      throw Error(ErrorCode::InvalidGenerator, "rule left side must be a non-unit monomial");
    }
    const int d = degree(rule.lhs);
    for (auto it = rule.rhs.begin(); it != rule.rhs.end();) {
      if (it->first.size() != n) throw Error(ErrorCode::InvalidGenerator, "rule term has wrong arity");
      if (it->second == 0) {
        it = rule.rhs.erase(it);
        continue;
      }
      if (degree(it->first) != d) {
        throw Error(ErrorCode::DegreeMismatch, "rule " + format(rule.lhs) + " -> " +
                                                   format(it->first) + " changes degree " +
                                                   std::to_string(d) + " to " +
                                                   std::to_string(degree(it->first)));
      }
      ++it;
    }
  }

  std::vector<Monomial> all;
  std::vector<int> exps(n, 0);
  enumerate(*this, 0, exps, top_degree(), all);
  Normalizer normalizer(*this);
  for (const auto& m : all) normalizer.run(m);
  normal_forms_ = normalizer.take();

  for (auto it = integrals_.begin(); it != integrals_.end();) {
    const auto& [m, value] = *it;
    if (m.size() != n) throw Error(ErrorCode::InvalidGenerator, "integral key has wrong arity");
    if (degree(m) != top_degree()) {
      throw Error(ErrorCode::DegreeMismatch, "integral of " + format(m) + " is not in top degree");
    }
    const Terms& nf = normal_form(m);
    if (nf.size() != 1 || nf.begin()->first != m || nf.begin()->second != 1) {
      throw Error(ErrorCode::ShapeMismatch, "integral key " + format(m) + " is not in normal form");
    }
    if (value == 0) {
      it = integrals_.erase(it);
    } else {
      ++it;
    }
  }
}

Space make_space(std::vector<Generator> generators, std::vector<Rule> rules, int complex_dimension,
                 std::map<Monomial, Rational> integrals, std::vector<Truncation> truncations) {
  std::shared_ptr<SpaceModel> s(new SpaceModel());
  s->generators_ = std::move(generators);
  s->rules_ = std::move(rules);
  s->complex_dimension_ = complex_dimension;
  s->integrals_ = std::move(integrals);
  s->truncations_ = std::move(truncations);
  s->validate_and_tabulate();
  return s;
}

Space point_space() {
  return make_space({}, {}, 0, {{Monomial::one(0), Rational(1)}});
}

// GradedClass

void require_same_ambient(const GradedClass& a, const GradedClass& b) {
  if (a.ambient() != b.ambient()) {
    throw Error(ErrorCode::AmbientMismatch, "classes live in different space models");
  }
}

void GradedClass::add_term(const Monomial& m, const Rational& c) { accumulate(terms_, m, c); }

GradedClass::GradedClass(Space ambient, const Terms& terms) : ambient_(std::move(ambient)) {
  for (const auto& [m, c] : terms) {
    if (m.size() != ambient_->generator_count()) {
      throw Error(ErrorCode::AmbientMismatch, "monomial arity does not match the space");
    }
    for (const auto& [n, cn] : ambient_->normal_form(m)) add_term(n, c * cn);
  }
}

GradedClass GradedClass::constant(Space ambient, const Rational& value) {
  GradedClass out(ambient);
  out.add_term(Monomial::one(ambient->generator_count()), value);
  return out;
}

GradedClass GradedClass::generator(Space ambient, std::string_view name) {
  auto idx = ambient->index_of(name);
  if (!idx) throw Error(ErrorCode::UnknownName, "no generator named '" + std::string(name) + "'");
  return generator(std::move(ambient), *idx);
}

GradedClass GradedClass::generator(Space ambient, std::size_t index) {
  std::vector<int> e(ambient->generator_count(), 0);
  e.at(index) = 1;
  return monomial(std::move(ambient), Monomial(std::move(e)));
}

GradedClass GradedClass::monomial(Space ambient, const Monomial& m, const Rational& coefficient) {
  return GradedClass(ambient, Terms{{m, coefficient}});
}

Rational GradedClass::constant_term() const {
  if (terms_.empty()) return 0;
  auto it = terms_.find(Monomial::one(ambient_->generator_count()));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> GradedClass::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int dm = ambient_->degree(m);
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  return d;
}

int GradedClass::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, ambient_->degree(m));
  return d;
}

std::string format_terms(const SpaceModel& space, const Terms& terms) {
  if (terms.empty()) return "0";
  std::vector<std::pair<int, const Terms::value_type*>> order;
  for (const auto& entry : terms) order.emplace_back(space.degree(entry.first), &entry);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (const auto& [deg, entry] : order) {
    const auto& [m, c] = *entry;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m.is_one()) {
      out += famsw::to_string(mag);
    } else {
      if (mag != 1) out += famsw::to_string(mag) + "*";
      out += space.format(m);
    }
  }
  return out;
}

std::string GradedClass::to_string() const { return format_terms(*ambient_, terms_); }

GradedClass GradedClass::operator-() const { return scale(-1, *this); }

GradedClass& GradedClass::operator+=(const GradedClass& other) {
  require_same_ambient(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& other) {
  require_same_ambient(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GradedClass& GradedClass::operator*=(const GradedClass& other) { return *this = mul(*this, other); }

GradedClass& GradedClass::operator*=(const Rational& r) { return *this = scale(r, *this); }

bool operator==(const GradedClass& a, const GradedClass& b) {
  return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
}

GradedClass mul(const GradedClass& a, const GradedClass& b) {
  require_same_ambient(a, b);
  const SpaceModel& s = *a.ambient();
  GradedClass out(a.ambient());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [sign, product] = s.multiply(ma, mb);
      if (sign == 0) continue;
      const Terms& nf = s.normal_form(product);
      if (nf.empty()) continue;
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      for (const auto& [n, cn] : nf) out.add_term(n, c * cn);
    }
  }
  return out;
}

GradedClass add(const GradedClass& a, const GradedClass& b) {
  GradedClass out = a;
  out += b;
  return out;
}

GradedClass scale(const Rational& r, const GradedClass& a) {
  GradedClass out(a.ambient());
  if (r == 0) return out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, r * c);
  return out;
}

GradedClass degree_part(const GradedClass& a, int degree) {
  GradedClass out(a.ambient());
  for (const auto& [m, c] : a.terms_) {
    if (a.ambient()->degree(m) == degree) out.terms_.emplace(m, c);
  }
  return out;
}

Rational integrate(const Space& space, const GradedClass& a) {
  if (a.ambient() != space) {
    throw Error(ErrorCode::AmbientMismatch, "class does not live in the integration space");
  }
  Rational total = 0;
  for (const auto& [m, c] : a.terms()) {
    auto it = space->integrals().find(m);
    if (it != space->integrals().end()) total += c * it->second;
  }
  return total;
}

GradedClass power(const GradedClass& a, int n) {
  GradedClass out = GradedClass::one(a.ambient());
  GradedClass base = a;
  while (n > 0) {
    if (n & 1) out = mul(out, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return out;
}

GradedClass exp(const GradedClass& a) {
  if (a.constant_term() != 0) {
    throw Error(ErrorCode::WrongDegree, "exp needs a class without constant term");
  }
  GradedClass out = GradedClass::one(a.ambient());
  GradedClass term = out;
  for (int k = 1; k <= a.ambient()->top_degree() + 1; ++k) {
    term = scale(Rational(1, k), mul(term, a));
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

GradedClass inverse(const GradedClass& a) {
  const Rational c = a.constant_term();
  if (c == 0) throw Error(ErrorCode::WrongDegree, "class with zero constant term is not invertible");
  // a = c(1 + n) with n nilpotent; 1/a = (1/c) sum (-n)^k.
  GradedClass n = scale(1 / c, a) - GradedClass::one(a.ambient());
  GradedClass minus_n = -n;
  GradedClass out = GradedClass::one(a.ambient());
  GradedClass term = out;
  for (int k = 1; k <= a.ambient()->top_degree() + 1; ++k) {
    term = mul(term, minus_n);
    if (term.is_zero()) break;
    out += term;
  }
  return scale(1 / c, out);
}

}  // namespace famsw
