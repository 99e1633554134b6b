#ifndef FAMSW_SERIES_HPP
#define FAMSW_SERIES_HPP

#include <vector>

#include "famsw/rational.hpp"

namespace famsw::series {

/// B_0..B_n with the convention B_1 = -1/2.
std::vector<Rational> bernoulli(int n);

/// Coefficients of x / (1 - e^{-x}) through x^n, generated from Bernoulli
/// numbers: the coefficient of x^k is (-1)^k B_k / k!.
std::vector<Rational> todd_root_series(int n);

/// Coefficients of e^x through x^n.
std::vector<Rational> exp_series(int n);

/// log f for a univariate series with f[0] == 1, same length as f.
std::vector<Rational> log_series(const std::vector<Rational>& f);

}  // namespace famsw::series

#endif  // FAMSW_SERIES_HPP
