#ifndef FAMSW_RATIONAL_HPP
#define FAMSW_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace famsw {

/// Exact rational number. gmpxx keeps results of arithmetic canonical
/// (lowest terms, positive denominator); values built from raw parts go
/// through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "n", "-n" or "p/q". Throws Error(ParseError) on malformed text or
/// a zero denominator.
Rational parse_rational(std::string_view text);

/// "n" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Approximate decimal rendering for display only.
std::string to_decimal(const Rational& r, int digits = 12);

bool is_integer(const Rational& r);

Integer binomial(std::int64_t n, std::int64_t k);
Integer factorial(std::int64_t n);

/// Generalised binomial coefficient n choose k for any integer n, k >= 0.
Rational binomial_general(const Rational& n, std::int64_t k);

}  // namespace famsw

#endif  // FAMSW_RATIONAL_HPP
