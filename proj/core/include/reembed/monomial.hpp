#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <vector>

namespace reembed {

/// Exponent vector. Trailing zero exponents are never stored, so two
/// monomials are equal iff their storage is equal, and a monomial can be read
/// in any ring with at least size() indeterminates.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<std::uint32_t> exps) : e_(exps) { trim(); }
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) { trim(); }

  static Monomial variable(std::size_t index, std::uint32_t power = 1) {
    Monomial m;
    if (power == 0) return m;
    m.e_.assign(index + 1, 0);
    m.e_[index] = power;
    return m;
  }

  [[nodiscard]] std::uint32_t operator[](std::size_t i) const { return i < e_.size() ? e_[i] : 0; }
  /// Number of stored exponents (index of last nonzero + 1).
  [[nodiscard]] std::size_t size() const { return e_.size(); }
  [[nodiscard]] bool is_one() const { return e_.empty(); }
  [[nodiscard]] const std::vector<std::uint32_t>& exponents() const { return e_; }

  [[nodiscard]] std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto x : e_) d += x;
    return d;
  }

  [[nodiscard]] std::int64_t weighted_degree(const std::vector<std::int64_t>& w) const {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += static_cast<std::int64_t>(e_[i]) * w.at(i);
    return d;
  }

  [[nodiscard]] bool divides(const Monomial& other) const {
    if (e_.size() > other.e_.size()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > other.e_[i]) return false;
    }
    return true;
  }

  /// True iff no index carries a positive exponent in both.
  [[nodiscard]] bool coprime(const Monomial& other) const {
    const std::size_t n = std::min(e_.size(), other.e_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (e_[i] != 0 && other.e_[i] != 0) return false;
    }
    return true;
  }

  [[nodiscard]] Monomial lcm(const Monomial& other) const {
    Monomial r;
    r.e_.resize(std::max(e_.size(), other.e_.size()));
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max((*this)[i], other[i]);
    return r;
  }

  [[nodiscard]] Monomial gcd(const Monomial& other) const {
    Monomial r;
    r.e_.resize(std::min(e_.size(), other.e_.size()));
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(e_[i], other.e_[i]);
    r.trim();
    return r;
  }

  Monomial& operator*=(const Monomial& other) {
    if (other.e_.size() > e_.size()) e_.resize(other.e_.size(), 0);
    for (std::size_t i = 0; i < other.e_.size(); ++i) e_[i] += other.e_[i];
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  /// Exact quotient; requires other.divides(*this).
  [[nodiscard]] Monomial operator/(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < other.e_.size(); ++i) r.e_[i] -= other.e_[i];
    r.trim();
    return r;
  }

  [[nodiscard]] Monomial pow(std::uint32_t k) const {
    if (k == 0) return {};
    Monomial r = *this;
    for (auto& x : r.e_) x *= k;
    return r;
  }

  /// Exponent vector with entry `i` cleared.
  [[nodiscard]] Monomial without(std::size_t i) const {
    Monomial r = *this;
    if (i < r.e_.size()) r.e_[i] = 0;
    r.trim();
    return r;
  }

  /// Keeps only the indices for which `keep` holds.
  template <class Pred>
  [[nodiscard]] Monomial restricted(Pred keep) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < r.e_.size(); ++i) {
      if (!keep(i)) r.e_[i] = 0;
    }
    r.trim();
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : e_) h = (h ^ x) * 1099511628211ULL;
    return h;
  }

 private:
  void trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
  }
  std::vector<std::uint32_t> e_;
};

/// Graded reverse lexicographic comparison, x_0 > x_1 > ... . Returns -1, 0
/// or 1.
inline int degrevlex_compare(const Monomial& a, const Monomial& b) {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace reembed
