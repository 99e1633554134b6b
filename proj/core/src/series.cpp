#include "famsw/series.hpp"

#include "famsw/errors.hpp"

namespace famsw::series {

std::vector<Rational> bernoulli(int n) {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * b[j];
    b[m] = -s / (m + 1);
  }
  return b;
}

std::vector<Rational> todd_root_series(int n) {
  auto b = bernoulli(n);
  std::vector<Rational> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    out[k] = b[k] / Rational(factorial(k));
    if (k % 2 == 1) out[k] = -out[k];
  }
  return out;
}

std::vector<Rational> exp_series(int n) {
  std::vector<Rational> out(n + 1);
  for (int k = 0; k <= n; ++k) out[k] = 1 / Rational(factorial(k));
  return out;
}

std::vector<Rational> log_series(const std::vector<Rational>& f) {
  if (f.empty() || f[0] != 1) throw Error(ErrorCode::RangeError, "log needs a series with f(0) = 1");
  // g = log f satisfies f g' = f', i.e. k g_k = k f_k - sum_{j=1}^{k-1} j g_j f_{k-j}.
  const std::size_t n = f.size();
  std::vector<Rational> g(n);
  for (std::size_t k = 1; k < n; ++k) {
    Rational s = Rational(static_cast<long>(k)) * f[k];
    for (std::size_t j = 1; j < k; ++j) s -= Rational(static_cast<long>(j)) * g[j] * f[k - j];
    g[k] = s / static_cast<long>(k);
  }
  return g;
}

}  // namespace famsw::series
