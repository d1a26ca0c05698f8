#pragma once

#include "reembed/fibers.hpp"
#include "reembed/matrix.hpp"
#include "reembed/morphism.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace reembed {

/// Maximal minors of A generate the unit ideal (k <= l). A matrix with no
/// rows counts as unimodular.
bool is_unimodular(const PolyMatrix& a);

enum class UmpSource { Solver, Fixture };

/// det(B) = 1 and A * B = (I_k | 0).
struct UMPSolution {
  PolyMatrix b;
  UmpSource source = UmpSource::Solver;
  std::string strategy;  // column-reduction, syzygy-basis, coordinate-change:<n>, fixture
};

/// Checks the UMP contract exactly; returns the first failure.
std::optional<std::string> ump_violation(const PolyMatrix& a, const PolyMatrix& b);

struct UmpOptions {
  unsigned coordinate_changes = 8;  // random retries on P0
  std::uint64_t seed = 1;
};

/// Throws MathError(NotUnimodular) or MathError(QsIncomplete).
UMPSolution ump_solve(const PolyMatrix& a, const UmpOptions& options = {});

/// Outcome of the UMP re-embedding: Θ: P/I -> P̂/J.
struct UmpReembedding {
  RingMorphism theta;                 // T; inverse holds φ^{-1} on the kept indeterminates
  RingMorphism phi;                   // F, automorphism of P
  std::vector<Polynomial> fhat;       // F̂ in P̂, indexed by the source ring
  std::vector<std::size_t> nu;        // x_{ν_i}, source indices
  std::vector<Polynomial> qtilde;     // in the source ring
  std::map<std::int64_t, UMPSolution> blocks;  // by degree
  std::vector<std::size_t> generator_order;    // sorted position -> input position of g_1..g_k
  IdealPresentation target;           // J in P̂
};

/// Per-degree blocks use `fixtures` when given (by degree), else ump_solve.
UmpReembedding ump_reembed(const IdealPresentation& ideal, std::size_t k,
                           const std::map<std::int64_t, PolyMatrix>& fixtures = {}, const UmpOptions& options = {});

struct FreeReembedding {
  UmpReembedding reembedding;
  std::vector<std::int64_t> weights;      // Ŵ
  std::vector<Polynomial> images;         // (p_1, ..., p_{n-m}) in P̂
  std::string rowspace_strategy;          // rows, module-basis
};

/// P/I regular: homogeneous isomorphism onto a polynomial ring. Throws
/// NotUnimodular, RowspaceNotFreeBasis or QsIncomplete.
FreeReembedding regular_free_reembed(const IdealPresentation& ideal,
                                     const std::map<std::int64_t, PolyMatrix>& fixtures = {},
                                     const UmpOptions& options = {});

struct SmoothnessReport {
  Regularity verdict = Regularity::Undetermined;
  std::optional<std::size_t> dimension;  // of P/I
  std::size_t codimension = 0;           // k = n - dim
  std::optional<std::vector<Rational>> witness;  // singular point (all indeterminates)
};

/// Jacobian criterion: minors of size k plus I give the unit ideal, or a
/// rational point of V(I) where the Jacobian rank drops.
SmoothnessReport smoothness_check(const IdealPresentation& ideal, std::uint64_t seed = 1);

/// X+-linear coefficient matrix over P0 of the given generators, columns in
/// ring order of the positive indeterminates.
PolyMatrix linear_coefficient_matrix(const GradedRing& ring, const std::vector<Polynomial>& gens);

}  // namespace reembed
