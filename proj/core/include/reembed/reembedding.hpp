#pragma once

#include "reembed/morphism.hpp"
#include "reembed/separating.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace reembed {

/// Z-separating re-embedding P/I -> K[X \ Z]/J.
struct ReembeddingResult {
  std::vector<std::size_t> z;
  SeparatingTuple tuple;     // coherent
  IdealPresentation target;  // J in K[X \ Z]
  Optimality status = Optimality::Inconclusive;
  RingMorphism phi;          // z_i -> h_i, other indeterminates fixed
  std::string note;
};

/// Degree-d search over subsets of the separating indeterminates of degree
/// d, largest first and lexicographic within a size. Throws
/// MathError(NoSeparatingInDegree) if there are none.
SeparatingTuple best_tuple_in_degree(const IdealPresentation& ideal, std::int64_t d);

/// Every subset of the winning size that admits a separating tuple.
std::vector<SeparatingTuple> all_best_tuples_in_degree(const IdealPresentation& ideal, std::int64_t d);

/// Re-embedding for a coherent tuple; checks it via rewrite_eliminate.
ReembeddingResult make_reembedding(const IdealPresentation& ideal, const SeparatingTuple& coherent);

/// Best tuples per degree of the separating indeterminates, coherified
/// across degrees.
ReembeddingResult best_separating_reembedding(const IdealPresentation& ideal);

/// Positive grading only: #Z = dim Lin(I), found by linear algebra over K.
ReembeddingResult positively_graded_optimal(const IdealPresentation& ideal);

/// Non-negative weight row with as many zeros as possible making every
/// generator homogeneous; nullopt if only the zero row works.
std::optional<std::vector<std::int64_t>> detect_grading(const std::vector<Polynomial>& gens, std::size_t n);

}  // namespace reembed
