#pragma once

#include "reembed/errors.hpp"
#include "reembed/graded_ring.hpp"
#include "reembed/ideal.hpp"

#include <set>
#include <string>
#include <vector>

namespace reembed {

/// A graded ring together with a tuple of nonzero generators.
template <class C>
class BasicPresentation {
 public:
  using Poly = BasicPolynomial<C>;

  BasicPresentation() = default;
  BasicPresentation(GradedRing ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (g.variable_span() > ring_.size()) throw std::invalid_argument("generator outside the ring");
      gens_.push_back(std::move(g));
    }
    ideal_ = BasicIdeal<C>(gens_, ring_.size());
  }

  [[nodiscard]] const GradedRing& ring() const { return ring_; }
  [[nodiscard]] const std::vector<Poly>& generators() const { return gens_; }
  [[nodiscard]] const BasicIdeal<C>& ideal() const { return ideal_; }
  [[nodiscard]] bool contains(const Poly& f) const { return ideal_.contains(f); }

  [[nodiscard]] bool is_homogeneous() const {
    for (const auto& g : gens_) {
      if (!ring_.is_homogeneous(g)) return false;
    }
    return true;
  }

  /// Homogeneous with every generator of positive degree, which forces
  /// I ∩ P0 = 0.
  void require_positive_homogeneous() const {
    for (const auto& g : gens_) {
      const auto d = ring_.w_degree(g);
      if (!d.homogeneous()) throw MathError(ErrorCode::NotHomogeneous, "generator is not W-homogeneous");
      if (d.value <= 0) throw MathError(ErrorCode::Precondition, "generator of W-degree 0");
    }
  }

  [[nodiscard]] std::vector<Poly> generators_of_degree(std::int64_t d) const {
    std::vector<Poly> out;
    for (const auto& g : gens_) {
      const auto w = ring_.w_degree(g);
      if (w.homogeneous() && w.value == d) out.push_back(g);
    }
    return out;
  }

  [[nodiscard]] std::set<std::int64_t> generator_degrees() const {
    std::set<std::int64_t> out;
    for (const auto& g : gens_) out.insert(ring_.w_degree(g).value);
    return out;
  }

 private:
  GradedRing ring_;
  std::vector<Poly> gens_;
  BasicIdeal<C> ideal_;
};

using IdealPresentation = BasicPresentation<Rational>;

}  // namespace reembed
