#pragma once

#include "reembed/polynomial.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace reembed {

/// Result of asking for the W-degree of a polynomial.
struct WDegree {
  enum class Kind { Zero, Homogeneous, NotHomogeneous };
  Kind kind = Kind::Zero;
  std::int64_t value = 0;

  [[nodiscard]] bool homogeneous() const { return kind == Kind::Homogeneous; }
};

/// Ordered indeterminates with a non-negative weight row. `parameters` names
/// the transcendentals of the coefficient field: empty means Q, otherwise
/// the field is Q(parameters).
class GradedRing {
 public:
  GradedRing() = default;
  GradedRing(std::vector<std::string> names, std::vector<std::int64_t> weights,
             std::vector<std::string> parameters = {});

  /// Standard grading (all weights 1).
  static GradedRing standard(std::vector<std::string> names);

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] const std::string& name(std::size_t i) const { return names_.at(i); }
  [[nodiscard]] const std::vector<std::int64_t>& weights() const { return weights_; }
  [[nodiscard]] std::int64_t weight(std::size_t i) const { return weights_.at(i); }
  [[nodiscard]] const std::vector<std::string>& parameters() const { return parameters_; }

  [[nodiscard]] std::optional<std::size_t> index_of(const std::string& name) const;
  /// Like index_of but throws on unknown names.
  [[nodiscard]] std::size_t require_index(const std::string& name) const;

  /// Indices with weight 0 (the a_i) and with positive weight, in ring order.
  [[nodiscard]] std::vector<std::size_t> degree_zero_indices() const;
  [[nodiscard]] std::vector<std::size_t> positive_indices() const;
  [[nodiscard]] bool is_positive() const { return degree_zero_indices().empty(); }
  [[nodiscard]] bool is_degree_zero(std::size_t i) const { return weights_.at(i) == 0; }

  [[nodiscard]] std::int64_t degree(const Monomial& m) const { return m.weighted_degree(weights_); }

  template <class C>
  [[nodiscard]] WDegree w_degree(const BasicPolynomial<C>& f) const {
    WDegree r;
    if (f.is_zero()) return r;
    r.kind = WDegree::Kind::Homogeneous;
    r.value = degree(f.terms().front().first);
    for (const auto& t : f.terms()) {
      if (degree(t.first) != r.value) {
        r.kind = WDegree::Kind::NotHomogeneous;
        break;
      }
    }
    return r;
  }

  template <class C>
  [[nodiscard]] bool is_homogeneous(const BasicPolynomial<C>& f) const {
    return f.is_zero() || w_degree(f).homogeneous();
  }

  /// Homogeneous parts in increasing degree; their sum is f.
  template <class C>
  [[nodiscard]] std::vector<std::pair<std::int64_t, BasicPolynomial<C>>> homogeneous_components(
      const BasicPolynomial<C>& f) const {
    std::map<std::int64_t, std::vector<typename BasicPolynomial<C>::Term>> parts;
    for (const auto& t : f.terms()) parts[degree(t.first)].push_back(t);
    std::vector<std::pair<std::int64_t, BasicPolynomial<C>>> out;
    for (auto& [d, ts] : parts) out.emplace_back(d, BasicPolynomial<C>::from_terms(std::move(ts)));
    return out;
  }

  /// Subring on the indices where keep[i] is true. `mapping` receives the
  /// new index of each old index, or -1.
  [[nodiscard]] GradedRing keep(const std::vector<bool>& keep, std::vector<long>* mapping = nullptr) const;

  /// Same names and weights, coefficient field extended by `params`.
  [[nodiscard]] GradedRing with_parameters(std::vector<std::string> params) const;

  friend bool operator==(const GradedRing& a, const GradedRing& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_ && a.parameters_ == b.parameters_;
  }

  /// e.g. "Q[a,x,y]" or "Q(a)[x,y]".
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::int64_t> weights_;
  std::vector<std::string> parameters_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

inline RingPtr make_ring(GradedRing r) { return std::make_shared<const GradedRing>(std::move(r)); }

}  // namespace reembed
