#pragma once

#include "reembed/rational_function.hpp"
#include "reembed/reembedding.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace reembed {

/// Γ = (c_1, ..., c_m), one value per degree-zero indeterminate.
using FiberPoint = std::vector<Rational>;

using GenericPresentation = BasicPresentation<RationalFunction>;
using GenericSeparatingTuple = BasicSeparatingTuple<RationalFunction>;

/// I_Γ in K[X+]: a_i -> c_i.
IdealPresentation special_fiber_ideal(const IdealPresentation& ideal, const FiberPoint& gamma);

/// I_L in L[X+] with L = K(a_1, ..., a_m).
GenericPresentation generic_fiber_ideal(const IdealPresentation& ideal);

/// Coherent tuple for I moved to the fiber; Z is reindexed into K[X+].
/// Throws MathError(Precondition) if the input is not coherent for I or
/// the result fails verification against the fiber ideal.
SeparatingTuple fiber_coherent_tuple(const IdealPresentation& ideal, const SeparatingTuple& tuple,
                                     const FiberPoint& gamma);
GenericSeparatingTuple fiber_coherent_tuple(const IdealPresentation& ideal, const SeparatingTuple& tuple);

/// Optimal re-embedding of the special fiber (positively graded).
ReembeddingResult fiber_optimal_reembedding(const IdealPresentation& ideal, const FiberPoint& gamma);

/// Same over L. Indices in z refer to K[X+].
struct GenericReembedding {
  std::vector<std::size_t> z;
  GenericSeparatingTuple tuple;
  GenericPresentation target;
  Optimality status = Optimality::OptimalByLinpart;
};
GenericReembedding fiber_optimal_reembedding(const IdealPresentation& ideal);

enum class Regularity { Regular, SingularAtPoint, Undetermined };
std::string_view to_string(Regularity r);

struct FiberReport {
  IdealPresentation fiber;
  std::size_t parameters = 0;             // m
  std::size_t fiber_cotangent = 0;        // dim Cot of K[X+]/I_Γ at <X+>
  std::size_t ambient_cotangent = 0;      // dim Cot of P/I at M_Γ
  std::size_t jacobian_rank = 0;          // rank of the Jacobian of G at (Γ, 0)
  std::optional<std::size_t> fiber_dimension;
  std::optional<std::size_t> ambient_dimension;  // Krull dimension of P/I
  Regularity regularity = Regularity::Undetermined;
  std::optional<bool> fiber_free;
};

/// Cotangent bookkeeping at Γ. "Regular" needs the Jacobian rank to equal
/// n - dim(P/I), a regular fiber and dim fiber = dim(P/I) - m; a fiber with
/// cotangent dimension above its dimension gives "singular".
FiberReport cotangent_report(const IdealPresentation& ideal, const FiberPoint& gamma);

}  // namespace reembed
