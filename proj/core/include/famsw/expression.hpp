#ifndef FAMSW_EXPRESSION_HPP
#define FAMSW_EXPRESSION_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "famsw/rational.hpp"
#include "famsw/ring.hpp"

namespace famsw {

using Parameters = std::map<std::string, Rational, std::less<>>;

/// Parses a polynomial expression over the given generators.
///
/// Grammar: names, integer literals, `+ - * / ^` and parentheses; `/` only
/// divides by a constant and `^` takes a nonnegative integer exponent. Names
/// found in `params` are substituted as constants. The result is not
/// normalized; terms above `max_degree` (if nonnegative) are dropped.
Terms parse_terms(const std::vector<Generator>& generators, std::string_view text,
                  const Parameters& params = {}, int max_degree = -1);

/// Parses into a normalized class of `space`.
GradedClass parse_class(const Space& space, std::string_view text, const Parameters& params = {});

}  // namespace famsw

#endif  // FAMSW_EXPRESSION_HPP
