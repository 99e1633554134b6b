#include "famsw/expression.hpp"

#include <cctype>

#include "famsw/errors.hpp"

namespace famsw {

namespace {

class Parser {
 public:
  Parser(const std::vector<Generator>& gens, std::string_view text, const Parameters& params,
         int max_degree)
      : gens_(gens), text_(text), params_(params), max_degree_(max_degree) {}

  Terms parse() {
    Terms out = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at position " + std::to_string(pos_) + " in '" +
                                           std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Monomial one() const { return Monomial::one(gens_.size()); }

  int degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) d += m[i] * gens_[i].degree;
    return d;
  }

  static void accumulate(Terms& into, const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = into.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) into.erase(it);
    }
  }

  Terms product(const Terms& a, const Terms& b) const {
    Terms out;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) {
        auto [sign, m] = koszul_multiply(gens_, ma, mb);
        if (sign == 0) continue;
        if (max_degree_ >= 0 && degree(m) > max_degree_) continue;
        accumulate(out, m, sign * ca * cb);
      }
    }
    return out;
  }

  Terms expr() {
    Terms out;
    bool negate = false;
    skip_space();
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    Terms t = term();
    for (const auto& [m, c] : t) accumulate(out, m, negate ? Rational(-c) : c);
    while (true) {
      if (eat('+')) {
        for (const auto& [m, c] : term()) accumulate(out, m, c);
      } else if (eat('-')) {
        for (const auto& [m, c] : term()) accumulate(out, m, -c);
      } else {
        break;
      }
    }
    return out;
  }

  Terms term() {
    Terms out = factor();
    while (true) {
      if (eat('*')) {
        out = product(out, factor());
      } else if (eat('/')) {
        Terms d = factor();
        if (d.size() != 1 || !d.begin()->first.is_one() || d.begin()->second == 0) {
          fail("division by a non-constant or zero");
        }
        Rational inv = 1 / d.begin()->second;
        for (auto& [m, c] : out) c *= inv;
      } else {
        break;
      }
    }
    return out;
  }

  Terms factor() {
    if (eat('-')) {
      Terms f = factor();
      for (auto& [m, c] : f) c = -c;
      return f;
    }
    Terms base = atom();
    if (eat('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
      Terms out{{one(), Rational(1)}};
      for (int i = 0; i < n; ++i) out = product(out, base);
      return out;
    }
    return base;
  }

  Terms atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Terms inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational v(Integer(std::string(text_.substr(start, pos_ - start)), 10));
      Terms out;
      accumulate(out, one(), v);
      return out;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (auto it = params_.find(name); it != params_.end()) {
        Terms out;
        accumulate(out, one(), it->second);
        return out;
      }
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].name == name) {
          std::vector<int> e(gens_.size(), 0);
          e[i] = 1;
          Monomial m(std::move(e));
          if (max_degree_ >= 0 && degree(m) > max_degree_) return {};
          return Terms{{m, Rational(1)}};
        }
      }
      pos_ = start;
      throw Error(ErrorCode::UnknownName, "unknown name '" + name + "' in '" + std::string(text_) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::vector<Generator>& gens_;
  std::string_view text_;
  const Parameters& params_;
  int max_degree_;
  std::size_t pos_ = 0;
};

}  // namespace

Terms parse_terms(const std::vector<Generator>& generators, std::string_view text,
                  const Parameters& params, int max_degree) {
  return Parser(generators, text, params, max_degree).parse();
}

GradedClass parse_class(const Space& space, std::string_view text, const Parameters& params) {
  return GradedClass(space, parse_terms(space->generators(), text, params, space->top_degree()));
}

}  // namespace famsw
