#pragma once

#include "reembed/polynomial.hpp"

#include <string>
#include <vector>

namespace reembed {

/// Exact quotient of a polynomial by a nonzero polynomial; throws
/// std::domain_error if b does not divide a.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor over Q (gcd(0, 0) = 0).
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

/// Element of Q(a_1, ..., a_m). Kept as num/den with gcd(num, den) = 1 and a
/// monic denominator, so equality is structural.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c) : num_(c), den_(1L) {}  // NOLINT(implicit)
  explicit RationalFunction(const Rational& c) : num_(c), den_(1L) {}
  explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(1L) {}
  RationalFunction(Polynomial num, Polynomial den);

  [[nodiscard]] const Polynomial& numerator() const { return num_; }
  [[nodiscard]] const Polynomial& denominator() const { return den_; }

  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
  [[nodiscard]] bool is_polynomial() const { return den_.is_one(); }

  [[nodiscard]] RationalFunction inverse() const;
  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void canonicalize();

  Polynomial num_;
  Polynomial den_{1L};
};

using GenericPolynomial = BasicPolynomial<RationalFunction>;

}  // namespace reembed
