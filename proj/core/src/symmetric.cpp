#include "famsw/symmetric.hpp"

#include <functional>
#include <numeric>

#include "famsw/errors.hpp"

namespace famsw::symmetric {

namespace {

void accumulate(RootPolynomial& into, const std::vector<int>& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

// Calls f(a) for every a in N^vars with |a| = total.
void for_each_composition(int vars, int total, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> a(vars, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == vars - 1) {
      a[i] = left;
      f(a);
      return;
    }
    for (int v = left; v >= 0; --v) {
      a[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (vars == 0) {
    if (total == 0) f(a);
    return;
  }
  rec(0, total);
}

}  // namespace

RootPolynomial elementary_in_roots(int vars, int i) {
  RootPolynomial out;
  if (i == 0) {
    out[std::vector<int>(vars, 0)] = 1;
    return out;
  }
  // All 0/1 vectors with i ones.
  std::vector<int> pick(vars, 0);
  std::fill(pick.end() - std::min(i, vars), pick.end(), 1);
  if (i > vars) return out;
  do {
    out[pick] = 1;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

RootPolynomial multiply(const RootPolynomial& a, const RootPolynomial& b) {
  RootPolynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      accumulate(out, m, ca * cb);
    }
  }
  return out;
}

ElementaryPolynomial to_elementary(int vars, RootPolynomial p) {
  std::vector<RootPolynomial> e(vars + 1);
  for (int i = 0; i <= vars; ++i) e[i] = elementary_in_roots(vars, i);
  ElementaryPolynomial out;
  while (!p.empty()) {
    const auto lead = p.rbegin()->first;
    const Rational c = p.rbegin()->second;
    std::vector<int> mu(vars, 0);
    for (int i = 0; i < vars; ++i) {
      int next = i + 1 < vars ? lead[i + 1] : 0;
      if (lead[i] < next) throw Error(ErrorCode::RangeError, "polynomial is not symmetric");
      mu[i] = lead[i] - next;
    }
    RootPolynomial prod = e[0];
    for (int i = 0; i < vars; ++i) {
      for (int k = 0; k < mu[i]; ++k) prod = multiply(prod, e[i + 1]);
    }
    for (const auto& [m, cm] : prod) accumulate(p, m, -c * cm);
    out[mu] += c;
  }
  return out;
}

std::vector<RootPolynomial> symmetric_power_power_sums(int vars, int k, int max_power) {
  // sum_a (a.x)^j = sum_{|b|=j} multinomial(j; b) x^b sum_a prod_i a_i^{b_i}
  std::vector<std::vector<int>> multisets;
  for_each_composition(vars, k, [&](const std::vector<int>& a) { multisets.push_back(a); });
  std::vector<RootPolynomial> out(max_power + 1);
  for (int j = 1; j <= max_power; ++j) {
    for_each_composition(vars, j, [&](const std::vector<int>& b) {
      Integer weight = 0;
      for (const auto& a : multisets) {
        Integer term = 1;
        for (int i = 0; i < vars && term != 0; ++i) {
          if (b[i] == 0) continue;
          Integer pw;
          mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(a[i]),
                        static_cast<unsigned long>(b[i]));
          term *= pw;
        }
        weight += term;
      }
      Integer multinomial = factorial(j);
      for (int bi : b) multinomial /= factorial(bi);
      accumulate(out[j], b, Rational(weight * multinomial));
    });
  }
  return out;
}

GradedClass substitute(const ElementaryPolynomial& p, const std::vector<GradedClass>& e,
                       const Space& space) {
  GradedClass out(space);
  for (const auto& [mu, c] : p) {
    GradedClass term = GradedClass::constant(space, c);
    for (std::size_t i = 0; i < mu.size() && !term.is_zero(); ++i) {
      if (mu[i] == 0) continue;
      if (i >= e.size()) {
        term = GradedClass(space);
        break;
      }
      term = mul(term, power(e[i], mu[i]));
    }
    out += term;
  }
  return out;
}

std::vector<GradedClass> power_sums_from_elementary(const std::vector<GradedClass>& e, int n,
                                                    const Space& space) {
  auto ei = [&](int i) { return i - 1 < static_cast<int>(e.size()) ? e[i - 1] : GradedClass(space); };
  std::vector<GradedClass> p;
  for (int k = 1; k <= n; ++k) {
    // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
    GradedClass pk = scale(Rational(k % 2 ? k : -k), ei(k));
    for (int i = 1; i < k; ++i) {
      GradedClass t = mul(ei(i), p[k - i - 1]);
      if (i % 2) {
        pk += t;
      } else {
        pk -= t;
      }
    }
    p.push_back(std::move(pk));
  }
  return p;
}

std::vector<GradedClass> elementary_from_power_sums(const std::vector<GradedClass>& p, int n,
                                                    const Space& space) {
  auto pi = [&](int i) { return i - 1 < static_cast<int>(p.size()) ? p[i - 1] : GradedClass(space); };
  std::vector<GradedClass> e;
  auto ei = [&](int i) { return i == 0 ? GradedClass::one(space) : e[i - 1]; };
  for (int k = 1; k <= n; ++k) {
    // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
    GradedClass s(space);
    for (int i = 1; i <= k; ++i) {
      GradedClass t = mul(ei(k - i), pi(i));
      if (i % 2) {
        s += t;
      } else {
        s -= t;
      }
    }
    e.push_back(scale(Rational(1, k), s));
  }
  return e;
}

}  // namespace famsw::symmetric
