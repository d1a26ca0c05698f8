#pragma once

#include "reembed/groebner.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace reembed {

/// Generators of an ideal in n indeterminates with a per-order cache of
/// reduced Groebner bases. Copies share the cache.
template <class C>
class BasicIdeal {
 public:
  using Poly = BasicPolynomial<C>;

  BasicIdeal() : cache_(std::make_shared<Cache>()) {}
  BasicIdeal(std::vector<Poly> gens, std::size_t n) : n_(n), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  [[nodiscard]] const std::vector<Poly>& generators() const { return gens_; }
  [[nodiscard]] std::size_t nvars() const { return n_; }
  [[nodiscard]] bool is_zero() const { return gens_.empty(); }

  [[nodiscard]] std::vector<Poly> groebner(const TermOrder& order) const {
    const std::string key = order.to_string();
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->bases.find(key);
      if (it != cache_->bases.end()) return it->second;
    }
    auto gb = groebner_basis(gens_, order);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    return cache_->bases.emplace(key, std::move(gb)).first->second;
  }
  [[nodiscard]] std::vector<Poly> groebner() const { return groebner(TermOrder::degrevlex(n_)); }

  [[nodiscard]] Poly reduce(const Poly& f) const { return normal_form(f, groebner(), TermOrder::degrevlex(n_)); }
  [[nodiscard]] bool contains(const Poly& f) const { return reduce(f).is_zero(); }
  [[nodiscard]] bool is_unit() const {
    const auto gb = groebner();
    return gb.size() == 1 && gb[0].is_constant();
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::vector<Poly>> bases;
  };

  std::vector<Poly> gens_;
  std::size_t n_ = 0;
  std::shared_ptr<Cache> cache_;
};

using Ideal = BasicIdeal<Rational>;

/// Equality of ideals by mutual membership of generators.
template <class C>
bool ideal_equal(const BasicIdeal<C>& a, const BasicIdeal<C>& b) {
  for (const auto& g : a.generators()) {
    if (!b.contains(g)) return false;
  }
  for (const auto& g : b.generators()) {
    if (!a.contains(g)) return false;
  }
  return true;
}

/// I ∩ K[X \ Z] by a Groebner basis for an elimination order. The result
/// stays in the same n indeterminates; none of its generators involve Z.
template <class C>
BasicIdeal<C> eliminate_oracle(const BasicIdeal<C>& ideal, const std::vector<std::size_t>& z) {
  if (z.empty()) return ideal;
  const auto order = TermOrder::elimination(ideal.nvars(), z);
  std::vector<BasicPolynomial<C>> kept;
  for (const auto& g : ideal.groebner(order)) {
    bool free = true;
    for (auto i : z) free = free && !g.involves(i);
    if (free) kept.push_back(g);
  }
  return BasicIdeal<C>(std::move(kept), ideal.nvars());
}

/// Largest set of indeterminates containing the support of no leading
/// monomial. nullopt for the unit ideal.
inline std::optional<std::size_t> dimension_of_monomial_ideal(const std::vector<Monomial>& lts, std::size_t n) {
  std::vector<std::uint64_t> supports;
  for (const auto& m : lts) {
    if (m.is_one()) return std::nullopt;
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) s |= std::uint64_t{1} << i;
    }
    supports.push_back(s);
  }
  if (n > 30) throw std::invalid_argument("dimension: too many indeterminates");
  std::size_t best = 0;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(set));
    if (size <= best) continue;
    bool independent = true;
    for (auto s : supports) {
      if ((s & ~set) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

/// Krull dimension of P/I; nullopt for I = ⟨1⟩.
template <class C>
std::optional<std::size_t> krull_dimension(const BasicIdeal<C>& ideal) {
  std::vector<Monomial> lts;
  for (const auto& g : ideal.groebner()) lts.push_back(g.leading_monomial());
  return dimension_of_monomial_ideal(lts, ideal.nvars());
}

}  // namespace reembed
