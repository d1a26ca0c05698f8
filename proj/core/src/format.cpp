#include "reembed/format.hpp"

#include "reembed/rational_function.hpp"

namespace reembed {

CoefficientText coefficient_text(const Rational& c, const std::vector<std::string>& /*params*/) {
  CoefficientText t;
  t.negative = c.sign() < 0;
  const mpq_class mag = abs(c.value());
  t.unit = mag == 1;
  t.magnitude = mag.get_str();
  return t;
}

CoefficientText coefficient_text(const RationalFunction& c, const std::vector<std::string>& params) {
  CoefficientText t;
  const Polynomial& num = c.numerator();
  if (c.is_polynomial() && num.size() == 1) {
    const auto& [m, q] = num.terms().front();
    t.negative = q.sign() < 0;
    const Polynomial mag(m, t.negative ? -q : q);
    t.unit = mag.is_one();
    t.magnitude = format_polynomial(mag, params);
    return t;
  }
  t.magnitude = "(" + format_polynomial(num, params) + ")";
  if (!c.is_polynomial()) t.magnitude += "/(" + format_polynomial(c.denominator(), params) + ")";
  return t;
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i < names.size() ? names[i] : "x" + std::to_string(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace reembed
