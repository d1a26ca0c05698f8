#pragma once

#include "reembed/monomial.hpp"
#include "reembed/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace reembed {

/// Sparse multivariate polynomial over a field C. Terms are kept sorted in
/// descending degrevlex order with no zero coefficients, so structural
/// equality is value equality. The ring is implicit: variable i is whatever
/// the surrounding GradedRing names at index i.
template <class C>
class BasicPolynomial {
 public:
  using Coeff = C;
  using Term = std::pair<Monomial, C>;

  BasicPolynomial() = default;
  BasicPolynomial(long c) { if (c != 0) terms_.emplace_back(Monomial{}, C(c)); }  // NOLINT
  explicit BasicPolynomial(const C& c) { if (!c.is_zero()) terms_.emplace_back(Monomial{}, c); }
  BasicPolynomial(const Monomial& m, const C& c) { if (!c.is_zero()) terms_.emplace_back(m, c); }

  static BasicPolynomial variable(std::size_t i) { return BasicPolynomial(Monomial::variable(i), C(1)); }

  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static BasicPolynomial from_terms(std::vector<Term> terms) {
    BasicPolynomial p;
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return degrevlex_compare(a.first, b.first) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
      } else if (!t.second.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  [[nodiscard]] C constant_value() const {
    if (terms_.empty() || !terms_.back().first.is_one()) return C(0);
    return terms_.back().second;
  }
  [[nodiscard]] bool is_one() const { return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second.is_one(); }

  /// Leading monomial/coefficient under the internal degrevlex order.
  [[nodiscard]] const Monomial& leading_monomial() const { return terms_.at(0).first; }
  [[nodiscard]] const C& leading_coefficient() const { return terms_.at(0).second; }

  [[nodiscard]] C coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
      if (t.first == m) return t.second;
    }
    return C(0);
  }

  [[nodiscard]] std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
    return d;
  }

  /// Largest exponent of variable i.
  [[nodiscard]] std::uint32_t degree_in(std::size_t i) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first[i]);
    return d;
  }

  [[nodiscard]] bool involves(std::size_t i) const { return degree_in(i) > 0; }

  /// One past the largest variable index that occurs.
  [[nodiscard]] std::size_t variable_span() const {
    std::size_t n = 0;
    for (const auto& t : terms_) n = std::max(n, t.first.size());
    return n;
  }

  BasicPolynomial operator-() const {
    BasicPolynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) { return *this = merge(*this, o, false); }
  BasicPolynomial& operator-=(const BasicPolynomial& o) { return *this = merge(*this, o, true); }
  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = multiply(*this, o); }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) { return merge(a, b, false); }
  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) { return merge(a, b, true); }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) { return multiply(a, b); }

  [[nodiscard]] BasicPolynomial scaled(const C& c) const {
    if (c.is_zero()) return {};
    BasicPolynomial r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  [[nodiscard]] BasicPolynomial shifted(const Monomial& m) const {
    BasicPolynomial r = *this;
    for (auto& t : r.terms_) t.first *= m;  // multiplication preserves the order
    return r;
  }

  [[nodiscard]] BasicPolynomial times_term(const Monomial& m, const C& c) const { return shifted(m).scaled(c); }

  [[nodiscard]] BasicPolynomial pow(std::uint32_t k) const {
    BasicPolynomial result(1L);
    BasicPolynomial base = *this;
    while (k > 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k > 0) base *= base;
    }
    return result;
  }

  /// Divides by the leading coefficient.
  [[nodiscard]] BasicPolynomial monic() const {
    if (is_zero() || leading_coefficient().is_one()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  /// Simultaneous substitution x_i -> images[i]. Variables with index beyond
  /// images.size() are left unchanged.
  [[nodiscard]] BasicPolynomial substitute(const std::vector<BasicPolynomial>& images) const {
    std::map<std::pair<std::size_t, std::uint32_t>, BasicPolynomial> powers;
    auto power = [&](std::size_t i, std::uint32_t e) -> const BasicPolynomial& {
      auto key = std::make_pair(i, e);
      auto it = powers.find(key);
      if (it != powers.end()) return it->second;
      return powers.emplace(key, images[i].pow(e)).first->second;
    };
    std::vector<Term> acc;
    for (const auto& [m, c] : terms_) {
      BasicPolynomial t(1L);
      std::vector<std::uint32_t> rest(m.size(), 0);
      bool any_rest = false;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (i < images.size()) {
          t *= power(i, m[i]);
        } else {
          rest[i] = m[i];
          any_rest = true;
        }
      }
      if (any_rest) t = t.shifted(Monomial(std::move(rest)));
      for (auto& term : t.terms_) {
        term.second *= c;
        acc.push_back(std::move(term));
      }
    }
    return from_terms(std::move(acc));
  }

  /// Partial derivative with respect to variable i.
  [[nodiscard]] BasicPolynomial derivative(std::size_t i) const {
    std::vector<Term> acc;
    for (const auto& [m, c] : terms_) {
      const auto e = m[i];
      if (e == 0) continue;
      std::vector<std::uint32_t> exps = m.exponents();
      exps[i] -= 1;
      acc.emplace_back(Monomial(std::move(exps)), c * C(static_cast<long>(e)));
    }
    return from_terms(std::move(acc));
  }

  /// Renames variables: index i becomes mapping[i]. Every occurring index
  /// must be mapped to a valid (non-negative) target.
  [[nodiscard]] BasicPolynomial remap(const std::vector<long>& mapping) const {
    std::vector<Term> acc;
    acc.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      std::vector<std::uint32_t> exps;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (i >= mapping.size() || mapping[i] < 0) throw std::logic_error("remap: variable has no image");
        const auto j = static_cast<std::size_t>(mapping[i]);
        if (exps.size() <= j) exps.resize(j + 1, 0);
        exps[j] += m[i];
      }
      acc.emplace_back(Monomial(std::move(exps)), c);
    }
    return from_terms(std::move(acc));
  }

  template <class F>
  [[nodiscard]] auto map_coefficients(F f) const {
    using D = decltype(f(std::declval<const C&>()));
    std::vector<typename BasicPolynomial<D>::Term> acc;
    for (const auto& [m, c] : terms_) acc.emplace_back(m, f(c));
    return BasicPolynomial<D>::from_terms(std::move(acc));
  }

  /// Sum of the terms for which pred(monomial) holds.
  template <class Pred>
  [[nodiscard]] BasicPolynomial filter(Pred pred) const {
    BasicPolynomial r;
    for (const auto& t : terms_) {
      if (pred(t.first)) r.terms_.push_back(t);
    }
    return r;
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) return false;
    }
    return true;
  }

 private:
  static BasicPolynomial merge(const BasicPolynomial& a, const BasicPolynomial& b, bool subtract) {
    BasicPolynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int cmp;
      if (i == a.terms_.size()) {
        cmp = -1;
      } else if (j == b.terms_.size()) {
        cmp = 1;
      } else {
        cmp = degrevlex_compare(a.terms_[i].first, b.terms_[j].first);
      }
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back(b.terms_[j++]);
        if (subtract) r.terms_.back().second = -r.terms_.back().second;
      } else {
        C c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  static BasicPolynomial multiply(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() < b.terms_.size()) return multiply(b, a);
    BasicPolynomial r;
    for (const auto& [m, c] : b.terms_) r += a.times_term(m, c);
    return r;
  }

  std::vector<Term> terms_;
};

using Polynomial = BasicPolynomial<Rational>;

}  // namespace reembed
