#pragma once

#include "reembed/graded_ring.hpp"
#include "reembed/parse.hpp"
#include "reembed/problem.hpp"

#include <string>
#include <vector>

namespace reembed::testing {

inline Polynomial P(const GradedRing& ring, const std::string& text) { return parse_polynomial(text, ring); }

inline std::vector<Polynomial> Ps(const GradedRing& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

inline ProblemFile load(const std::string& name) { return load_problem(std::string(REEMBED_DATA_DIR) + "/" + name); }

inline std::vector<std::size_t> vars(const GradedRing& ring, const std::string& names) {
  return parse_indeterminates(names, ring);
}

}  // namespace reembed::testing
