#include "reembed/rational.hpp"

#include "reembed/errors.hpp"

#include <cctype>
#include <string>

namespace reembed {

Rational::Rational(long num, long den) {
  if (den == 0) throw MathError(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  const auto slash = s.find('/');
  auto all_digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  const std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!all_digits(start, num_end) ||
      (slash != std::string::npos && !all_digits(slash + 1, s.size()))) {
    throw ParseError("malformed rational '" + s + "'", 0);
  }
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'", 0);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
  return Rational(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw MathError(ErrorCode::DivisionByZero, "inverse of zero");
  Rational r;
  mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  mpq_mul(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw MathError(ErrorCode::DivisionByZero, "division by zero");
  mpq_div(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}

}  // namespace reembed
