#include "reembed/rational_function.hpp"

#include "reembed/errors.hpp"
#include "reembed/format.hpp"

#include <map>
#include <stdexcept>

namespace reembed {

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw MathError(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (b.is_constant()) return a.scaled(b.constant_value().inverse());
  const Monomial& lm = b.leading_monomial();
  const Rational lc_inv = b.leading_coefficient().inverse();
  std::vector<Polynomial::Term> q;
  Polynomial r = a;
  while (!r.is_zero()) {
    const Monomial& m = r.leading_monomial();
    if (!lm.divides(m)) throw std::domain_error("exact_quotient: not divisible");
    Monomial t = m / lm;
    Rational c = r.leading_coefficient() * lc_inv;
    r -= b.times_term(t, c);
    q.emplace_back(std::move(t), std::move(c));
  }
  return Polynomial::from_terms(std::move(q));
}

namespace {

// Coefficients of f as a polynomial in variable v.
std::map<std::uint32_t, Polynomial> split(const Polynomial& f, std::size_t v) {
  std::map<std::uint32_t, std::vector<Polynomial::Term>> parts;
  for (const auto& [m, c] : f.terms()) parts[m[v]].emplace_back(m.without(v), c);
  std::map<std::uint32_t, Polynomial> out;
  for (auto& [e, ts] : parts) out.emplace(e, Polynomial::from_terms(std::move(ts)));
  return out;
}

Polynomial content_in(const Polynomial& f, std::size_t v) {
  Polynomial g;
  for (const auto& [e, c] : split(f, v)) {
    g = polynomial_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// lc^k * f = q * g + r with deg_v r < deg_v g, returned r only.
Polynomial pseudo_remainder(Polynomial f, const Polynomial& g, std::size_t v) {
  const std::uint32_t n = g.degree_in(v);
  const Polynomial lc_g = split(g, v).rbegin()->second;
  while (!f.is_zero()) {
    const std::uint32_t m = f.degree_in(v);
    if (m < n) break;
    const Polynomial lc_f = split(f, v).rbegin()->second;
    f = lc_g * f - lc_f * g.shifted(Monomial::variable(v, m - n));
  }
  return f;
}

std::size_t first_variable(const Polynomial& a, const Polynomial& b) {
  const std::size_t span = std::max(a.variable_span(), b.variable_span());
  for (std::size_t i = 0; i < span; ++i) {
    if (a.involves(i) || b.involves(i)) return i;
  }
  return span;
}

}  // namespace

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1L);
  const std::size_t v = first_variable(a, b);
  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  const Polynomial c = polynomial_gcd(ca, cb);
  Polynomial pa = exact_quotient(a, ca);
  Polynomial pb = exact_quotient(b, cb);
  if (pa.degree_in(v) == 0 || pb.degree_in(v) == 0) return c;
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return c;
    r = exact_quotient(r, content_in(r, v));
    pa = std::move(pb);
    pb = std::move(r);
  }
  return (c * exact_quotient(pb, content_in(pb, v))).monic();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (den_.is_zero()) throw MathError(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(1L);
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = polynomial_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  const Rational lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    const Rational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw MathError(ErrorCode::DivisionByZero, "inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial(1L);
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
  const std::string n = format_polynomial(num_, names);
  if (den_.is_one()) return n;
  return "(" + n + ")/(" + format_polynomial(den_, names) + ")";
}

}  // namespace reembed
