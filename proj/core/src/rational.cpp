#include "famsw/rational.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "famsw/errors.hpp"

namespace famsw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NonConfluent: return "NonConfluent";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::VirtualRank: return "VirtualRank";
    case ErrorCode::NotALine: return "NotALine";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::VirtualInput: return "VirtualInput";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::EvenM: return "EvenM";
    case ErrorCode::RankBound: return "RankBound";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::BadMultiplicity: return "BadMultiplicity";
    case ErrorCode::RepeatedOddGenerator: return "RepeatedOddGenerator";
    case ErrorCode::InterpolationRankDeficient: return "InterpolationRankDeficient";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::JobError: return "JobError";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  std::string digits(s.substr(i));
  out = Integer(digits, 10);
  if (s[0] == '-') out = -out;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  Integer num, den = 1;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, num)) {
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    return Rational(num);
  }
  std::string_view den_text = s.substr(slash + 1);
  if (!parse_integer(s.substr(0, slash), num) || !parse_integer(den_text, den) ||
      den_text.front() == '-' || den_text.front() == '+') {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  if (den == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_decimal(const Rational& r, int digits) {
  mpf_class f(r, 256);
  std::ostringstream out;
  out << std::setprecision(digits) << f;
  return out.str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(std::int64_t n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return out;
}

Rational binomial_general(const Rational& n, std::int64_t k) {
  if (k < 0) return 0;
  Rational out = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    out *= (n - i);
    out /= (i + 1);
  }
  return out;
}

}  // namespace famsw
