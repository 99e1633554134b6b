#include "famsw/surfaces.hpp"

#include "famsw/errors.hpp"

namespace famsw {

SurfaceModel surface_model(const SurfaceData& data) {
  const std::size_t n = data.basis.size();
  if (data.intersection.size() != n || data.canonical.size() != n) {
    throw Error(ErrorCode::ShapeMismatch, "intersection matrix and canonical class must match the basis");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (data.intersection[i].size() != n) {
      throw Error(ErrorCode::ShapeMismatch, "intersection matrix must be square");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (data.intersection[i][j] != data.intersection[j][i]) {
        throw Error(ErrorCode::ShapeMismatch, "intersection matrix must be symmetric");
      }
    }
  }

  std::vector<Generator> gens;
  for (const auto& name : data.basis) gens.push_back({name, 2, Parity::Even});
  gens.push_back({"pt", 4, Parity::Even});
  const std::size_t pt = n;
  auto mono = [&](std::initializer_list<std::size_t> idx) {
    std::vector<int> e(n + 1, 0);
    for (auto i : idx) ++e[i];
    return Monomial(std::move(e));
  };

  std::vector<Rule> rules;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Terms rhs;
      if (data.intersection[i][j] != 0) rhs[mono({pt})] = data.intersection[i][j];
      rules.push_back({mono({i, j}), rhs});
    }
    rules.push_back({mono({pt, i}), {}});
  }
  rules.push_back({mono({pt, pt}), {}});

  Space space = make_space(gens, rules, 2, {{mono({pt}), Rational(1)}});

  GradedClass c1(space);
  for (std::size_t i = 0; i < n; ++i) {
    c1 -= scale(data.canonical[i], GradedClass::generator(space, i));
  }
  GradedClass c = GradedClass::one(space) + c1 + scale(data.c2, GradedClass::generator(space, pt));
  return {space, BundleClass(2, c)};
}

GradedClass surface_class(const SurfaceModel& model, const std::vector<Rational>& coords) {
  const std::size_t n = model.space->generator_count() - 1;
  if (coords.size() != n) throw Error(ErrorCode::ShapeMismatch, "class coordinates must match the basis");
  GradedClass out(model.space);
  for (std::size_t i = 0; i < n; ++i) out += scale(coords[i], GradedClass::generator(model.space, i));
  return out;
}

Rational noether_defect(const SurfaceData& data) {
  Rational k2 = 0;
  for (std::size_t i = 0; i < data.canonical.size(); ++i) {
    for (std::size_t j = 0; j < data.canonical.size(); ++j) {
      k2 += data.canonical[i] * data.canonical[j] * data.intersection.at(i).at(j);
    }
  }
  return Rational(12 * (1 - data.q + data.pg)) - (k2 + data.c2);
}

SurfaceData cp2_data() {
  return SurfaceData{{"h"}, {{Rational(1)}}, {Rational(-3)}, Rational(3), 0, 0};
}

SurfaceData k3_data(const Rational& c_squared) {
  return SurfaceData{{"C"}, {{c_squared}}, {Rational(0)}, Rational(24), 1, 0};
}

Space torus_model(int q) {
  if (q < 0) throw Error(ErrorCode::RangeError, "torus dimension must be nonnegative");
  std::vector<Generator> gens;
  for (int i = 1; i <= 2 * q; ++i) gens.push_back({"t" + std::to_string(i), 1, Parity::Odd});
  std::vector<int> top(2 * q, 1);
  return make_space(gens, {}, q, {{Monomial(top), Rational(1)}});
}

namespace {

Monomial lift(const Monomial& m, int xi_power) {
  std::vector<int> e = m.exponents();
  e.push_back(xi_power);
  return Monomial(std::move(e));
}

Terms lift(const Terms& t) {
  Terms out;
  for (const auto& [m, c] : t) out.emplace(lift(m, 0), c);
  return out;
}

}  // namespace

ProjBundleHandle projective_bundle(const BundleClass& v) {
  const Space& base = v.ambient();
  const int r = v.rank();
  if (r < 1 || !v.is_honest()) {
    throw Error(ErrorCode::VirtualRank, "projective bundles need an honest bundle of rank >= 1");
  }
  std::string xi_name = "xi";
  for (int k = 1; base->index_of(xi_name); ++k) xi_name = "xi" + std::to_string(k);

  std::vector<Generator> gens = base->generators();
  gens.push_back({xi_name, 2, Parity::Even});
  const std::size_t nb = base->generator_count();

  std::vector<Rule> rules;
  for (const auto& rule : base->rules()) rules.push_back({lift(rule.lhs, 0), lift(rule.rhs)});
  // xi^r -> -sum_{i=1}^{r} c_i(V) xi^{r-i}
  Terms rhs;
  for (int i = 1; i <= r; ++i) {
    const GradedClass ci = v.chern(i);
    for (const auto& [m, c] : ci.terms()) rhs[lift(m, r - i)] -= c;
  }
  rules.push_back({lift(Monomial::one(nb), r), rhs});

  std::vector<Truncation> truncations = base->truncations();
  Truncation base_bound;
  for (std::size_t i = 0; i < nb; ++i) base_bound.generators.push_back(i);
  base_bound.max_degree = base->top_degree();
  truncations.push_back(base_bound);

  std::map<Monomial, Rational> integrals;
  for (const auto& [m, value] : base->integrals()) integrals.emplace(lift(m, r - 1), value);

  Space total = make_space(std::move(gens), std::move(rules), base->complex_dimension() + r - 1,
                           std::move(integrals), std::move(truncations));
  GradedClass xi = GradedClass::generator(total, nb);
  GradedClass lifted(total, lift(v.total_chern().terms()));
  return ProjBundleHandle{total, base, r, xi_name, v, xi, lifted};
}

GradedClass pullback(const ProjBundleHandle& h, const GradedClass& a) {
  if (a.ambient() != h.base) throw Error(ErrorCode::AmbientMismatch, "class does not live on the base");
  return GradedClass(h.total, lift(a.terms()));
}

BundleClass pullback(const ProjBundleHandle& h, const BundleClass& e) {
  return BundleClass(e.rank(), pullback(h, e.total_chern()));
}

GradedClass pushforward(const ProjBundleHandle& h, const GradedClass& a) {
  if (a.ambient() != h.total) throw Error(ErrorCode::AmbientMismatch, "class does not live on the total space");
  const std::size_t nb = h.base->generator_count();
  Terms out;
  for (const auto& [m, c] : a.terms()) {
    if (m[nb] != h.rank - 1) continue;
    std::vector<int> e(m.exponents().begin(), m.exponents().begin() + static_cast<long>(nb));
    out[Monomial(std::move(e))] += c;
  }
  return GradedClass(h.base, out);
}

BundleClass hyperplane_line(const ProjBundleHandle& h) { return BundleClass::line(h.xi); }

BundleClass relative_tangent(const ProjBundleHandle& h) {
  BundleClass twisted = tensor_line(pullback(h, h.bundle), hyperplane_line(h));
  return BundleClass(h.rank - 1, twisted.total_chern());
}

GradedClass exceptional_class(const ProjBundleHandle& h) { return -h.xi; }

GradedClass fundamental_point(const Space& space) {
  for (const auto& [m, value] : space->integrals()) {
    return GradedClass::monomial(space, m, 1 / value);
  }
  throw Error(ErrorCode::ShapeMismatch, "space has no nonzero integrals");
}

}  // namespace famsw
