#include "reembed/parse.hpp"

#include "reembed/errors.hpp"
#include "reembed/format.hpp"

#include <cctype>
#include <limits>

namespace reembed {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const GradedRing& ring) : s_(text), ring_(ring) {}

  Polynomial run() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_), pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial p = term();
    while (true) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    while (accept('*')) p *= unary();
    return p;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        fail("exponent must be a non-negative integer");
      }
      unsigned long long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<unsigned>(s_[pos_] - '0');
        if (e > std::numeric_limits<std::uint32_t>::max()) {
          pos_ = start;
          fail("exponent too large");
        }
        ++pos_;
      }
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') fail("ambiguous repeated '^', use parentheses");
      return base.pow(static_cast<std::uint32_t>(e));
    }
    return base;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      const std::size_t save = pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        std::string den = digits();
        if (den.empty()) fail("expected denominator after '/'");
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        num += "/" + den;
      } else {
        pos_ = save;
      }
      check_no_implicit();
      return Polynomial(Rational::parse(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown indeterminate '" + name + "'");
      }
      check_no_implicit();
      return Polynomial::variable(*idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  // Juxtaposition such as "2x" or "x y" is rejected rather than multiplied.
  void check_no_implicit() {
    const std::size_t save = pos_;
    skip();
    if (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
        fail("implicit multiplication is not allowed, use '*'");
      }
    }
    pos_ = save;
  }

  std::string_view s_;
  const GradedRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const GradedRing& ring) { return Parser(text, ring).run(); }

std::string to_string(const Polynomial& p, const GradedRing& ring) { return format_polynomial(p, ring.names()); }

}  // namespace reembed
