#pragma once

#include "reembed/polynomial.hpp"

#include <string>
#include <vector>

namespace reembed {

class RationalFunction;

/// How a coefficient is spelled in front of a monomial.
struct CoefficientText {
  bool negative = false;
  bool unit = false;  // |c| == 1, so it is omitted before a monomial
  std::string magnitude;
};

CoefficientText coefficient_text(const Rational& c, const std::vector<std::string>& params);
CoefficientText coefficient_text(const RationalFunction& c, const std::vector<std::string>& params);

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names);

/// Terms in descending degrevlex order, explicit `*` and `^`, e.g.
/// `a^5*w^2 - a^2*w^2`. Rational output re-parses to the same polynomial.
template <class C>
std::string format_polynomial(const BasicPolynomial<C>& p, const std::vector<std::string>& names,
                              const std::vector<std::string>& params = {}) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const CoefficientText ct = coefficient_text(c, params);
    if (first) {
      if (ct.negative) out += "-";
    } else {
      out += ct.negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += ct.magnitude;
    } else {
      if (!ct.unit) out += ct.magnitude + "*";
      out += format_monomial(m, names);
    }
  }
  return out;
}

}  // namespace reembed
