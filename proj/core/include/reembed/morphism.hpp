#pragma once

#include "reembed/graded_ring.hpp"
#include "reembed/polynomial.hpp"

#include <optional>
#include <vector>

namespace reembed {

/// K-algebra homomorphism source -> target given by the images of the
/// source indeterminates.
struct RingMorphism {
  GradedRing source;
  GradedRing target;
  std::vector<Polynomial> images;                  // in the target ring
  std::optional<std::vector<Polynomial>> inverse;  // images of the target indeterminates, in the source ring

  [[nodiscard]] Polynomial apply(const Polynomial& f) const { return f.substitute(images); }
  [[nodiscard]] std::vector<Polynomial> apply(const std::vector<Polynomial>& fs) const {
    std::vector<Polynomial> out;
    for (const auto& f : fs) out.push_back(apply(f));
    return out;
  }

  /// Every image is homogeneous of the degree of its indeterminate.
  [[nodiscard]] bool preserves_degrees() const {
    for (std::size_t i = 0; i < images.size(); ++i) {
      const auto& p = images[i];
      if (p.is_zero()) continue;
      const auto d = target.w_degree(p);
      if (!d.homogeneous() || d.value != source.weight(i)) return false;
    }
    return true;
  }

  static RingMorphism identity(const GradedRing& ring) {
    RingMorphism m{ring, ring, {}, std::nullopt};
    for (std::size_t i = 0; i < ring.size(); ++i) m.images.push_back(Polynomial::variable(i));
    m.inverse = m.images;
    return m;
  }
};

}  // namespace reembed
