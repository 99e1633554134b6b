#include "famsw/applications.hpp"

#include <random>

#include "famsw/bundles.hpp"
#include "famsw/errors.hpp"

namespace famsw {

Rational severi_one_point(const SurfaceData& surface, const std::vector<Rational>& c_coords, int p) {
  if (p < 1) throw Error(ErrorCode::BadMultiplicity, "multiplicity must be >= 1");
  SurfaceModel model = surface_model(surface);
  BundleClass e_c = BundleClass::line(surface_class(model, c_coords));
  BundleClass inner = whitney_sum(dual(model.tangent), BundleClass::trivial(model.space, 1));
  BundleClass f = tensor_line(sym_power(inner, p - 1), e_c);
  return integrate(model.space, f.chern(2));
}

Rational nodal_cp2(int d) {
  if (d < 1) throw Error(ErrorCode::RangeError, "degree must be >= 1");
  return severi_one_point(cp2_data(), {Rational(d)}, 2);
}

Rational k3_twistor_count(const Rational& c_squared) {
  return severi_one_point(k3_data(c_squared), {Rational(1)}, 2);
}

Rational todd_genus(const SurfaceData& surface) {
  SurfaceModel model = surface_model(surface);
  return integrate(model.space, degree_part(todd(model.tangent), 4));
}

SurfaceData formal_surface(const ChernNumbers& n) {
  SurfaceData s;
  s.basis = {"C", "k"};
  s.intersection = {{n.c2_number, n.ck}, {n.ck, n.k2}};
  s.canonical = {Rational(0), Rational(1)};
  s.c2 = n.c2;
  return s;
}

namespace {

const std::array<std::string, 4> kVariableNames = {"C2", "CK", "K2", "c2"};

std::vector<std::array<int, 4>> degree_two_monomials() {
  std::vector<std::array<int, 4>> out;
  for (int total = 0; total <= 2; ++total) {
    for (int a = total; a >= 0; --a) {
      for (int b = total - a; b >= 0; --b) {
        for (int c = total - a - b; c >= 0; --c) {
          out.push_back({a, b, c, total - a - b - c});
        }
      }
    }
  }
  return out;
}

Rational monomial_value(const std::array<int, 4>& e, const std::array<Rational, 4>& x) {
  Rational v = 1;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < e[i]; ++k) v *= x[i];
  }
  return v;
}

std::array<Rational, 4> as_array(const ChernNumbers& n) { return {n.c2_number, n.ck, n.k2, n.c2}; }

Rational evaluate_at(const ChernNumbers& n, int p) { return severi_one_point(formal_surface(n), {1, 0}, p); }

// Exact Gauss-Jordan elimination; returns nullopt when singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

Rational UniversalPolynomial::evaluate(const ChernNumbers& n) const {
  Rational out = 0;
  const auto x = as_array(n);
  for (const auto& [e, c] : coefficients) out += c * monomial_value(e, x);
  return out;
}

std::map<std::string, Rational> UniversalPolynomial::named_coefficients() const {
  std::map<std::string, Rational> out;
  for (const auto& [e, c] : coefficients) {
    std::string name;
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (!name.empty()) name += '*';
      name += kVariableNames[i];
      if (e[i] > 1) name += "^" + std::to_string(e[i]);
    }
    out[name.empty() ? "1" : name] = c;
  }
  return out;
}

UniversalPolynomial universal_poly(int p) {
  if (p < 1 || p > kMaxUniversalMultiplicity) {
    throw Error(ErrorCode::RangeError, "universal polynomials are supported for 1 <= p <= 8");
  }
  // The principal lattice {a in N^4 : |a| <= 2} is unisolvent for degree 2.
  const auto monomials = degree_two_monomials();
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> values;
  for (const auto& point : monomials) {
    std::array<Rational, 4> x{point[0], point[1], point[2], point[3]};
    std::vector<Rational> row;
    for (const auto& e : monomials) row.push_back(monomial_value(e, x));
    matrix.push_back(std::move(row));
    values.push_back(evaluate_at({x[0], x[1], x[2], x[3]}, p));
  }
  auto coeffs = solve(matrix, values);
  if (!coeffs) {
    throw Error(ErrorCode::InterpolationRankDeficient, "interpolation grid does not determine the polynomial");
  }
  UniversalPolynomial out;
  out.p = p;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if ((*coeffs)[i] != 0) out.coefficients[monomials[i]] = (*coeffs)[i];
  }

  std::mt19937 rng(20260101u + static_cast<unsigned>(p));
  std::uniform_int_distribution<int> dist(-9, 9);
  out.verified = true;
  for (int trial = 0; trial < 5; ++trial) {
    std::array<int, 4> x{};
    do {
      for (auto& xi : x) xi = dist(rng);
    } while (x[0] >= 0 && x[1] >= 0 && x[2] >= 0 && x[3] >= 0 && x[0] + x[1] + x[2] + x[3] <= 2);
    ChernNumbers n{x[0], x[1], x[2], x[3]};
    if (out.evaluate(n) != evaluate_at(n, p)) out.verified = false;
  }
  return out;
}

}  // namespace famsw
