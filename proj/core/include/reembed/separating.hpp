#pragma once

#include "reembed/linear_algebra.hpp"
#include "reembed/presentation.hpp"
#include "reembed/term_order.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reembed {

inline constexpr std::string_view kNotSeparating = "Z is not separating for I";

enum class TupleKind { Plain, Coherent };

/// F = (f_1, ..., f_s) matched with Z = (z_1, ..., z_s).
template <class C>
struct BasicSeparatingTuple {
  std::vector<std::size_t> z;
  std::vector<BasicPolynomial<C>> f;
  TupleKind kind = TupleKind::Plain;
  std::optional<TermOrder> order;  // witness with LT(f_i) = z_i
};

using SeparatingTuple = BasicSeparatingTuple<Rational>;

/// Describes why (z, f) is not coherently separating, or nullopt if it is:
/// every f_i has the form z_i - h_i with no z_j dividing a term of any h_i.
template <class C>
std::optional<std::string> coherence_violation(const std::vector<std::size_t>& z,
                                               const std::vector<BasicPolynomial<C>>& f) {
  if (z.size() != f.size()) return "Z and F have different lengths";
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Monomial zi = Monomial::variable(z[i]);
    if (!f[i].coefficient(zi).is_one()) return "f_" + std::to_string(i + 1) + " does not have z_i with coefficient 1";
    for (const auto& [m, c] : f[i].terms()) {
      if (m == zi) continue;
      for (auto j : z) {
        if (m[j] > 0) return "an indeterminate of Z divides a term of h_" + std::to_string(i + 1);
      }
    }
  }
  return std::nullopt;
}

template <class C>
bool is_coherent(const std::vector<std::size_t>& z, const std::vector<BasicPolynomial<C>>& f) {
  return !coherence_violation(z, f).has_value();
}

/// Substitutes z_i -> h_i = z_i - f_i until no z_i is left. Zero results
/// are kept so positions match the input.
template <class C>
std::vector<BasicPolynomial<C>> rewrite_tuple(const std::vector<BasicPolynomial<C>>& gens,
                                              const std::vector<std::size_t>& z,
                                              const std::vector<BasicPolynomial<C>>& f) {
  std::size_t span = 0;
  for (auto i : z) span = std::max(span, i + 1);
  std::vector<BasicPolynomial<C>> images;
  for (std::size_t i = 0; i < span; ++i) images.push_back(BasicPolynomial<C>::variable(i));
  for (std::size_t k = 0; k < z.size(); ++k) images[z[k]] = BasicPolynomial<C>::variable(z[k]) - f[k];
  auto involves_z = [&](const BasicPolynomial<C>& p) {
    for (auto i : z) {
      if (p.involves(i)) return true;
    }
    return false;
  };
  std::vector<BasicPolynomial<C>> out;
  for (const auto& g : gens) {
    BasicPolynomial<C> p = g;
    std::size_t passes = 0;
    while (involves_z(p)) {
      if (passes++ > z.size()) throw MathError(ErrorCode::Precondition, "rewriting does not terminate");
      p = p.substitute(images);
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// Decomposition g = sum cvec_i z_i + rest, where no term of rest is t*z_i
/// with t in P0.
struct ZLinearData {
  Polynomial lin;
  std::vector<Polynomial> cvec;
  Polynomial rest;
};

/// Linear parts (standard degree 1) of the generators.
struct LinPartSpace {
  DenseMatrix<Rational> coefficients;  // one row per generator, one column per indeterminate
  DenseMatrix<Rational> basis;         // reduced echelon rows
  std::size_t dimension = 0;
};

enum class Optimality { OptimalByLinpart, Inconclusive };

std::string_view to_string(Optimality o);

LinPartSpace lin_part_space(const IdealPresentation& ideal);

/// Rank of the Z-columns of the linear-part coefficient matrix equals #Z.
bool top_rank_check(const IdealPresentation& ideal, const std::vector<std::size_t>& z);

ZLinearData z_linear_data(const Polynomial& g, const GradedRing& ring, const std::vector<std::size_t>& z);

/// Z stably sorted by W-degree; validates membership in X+ and distinctness.
std::vector<std::size_t> normalize_z(const GradedRing& ring, std::vector<std::size_t> z);

/// Homogeneous Z-separating tuple built degree by degree from module
/// membership over P0. Throws MathError(NotSeparating) with kNotSeparating.
SeparatingTuple find_separating_tuple(const IdealPresentation& ideal, const std::vector<std::size_t>& z);
std::optional<SeparatingTuple> try_find_separating_tuple(const IdealPresentation& ideal,
                                                         const std::vector<std::size_t>& z);

/// Checks f_i ∈ I, W-homogeneity, lin_Z(f_i) = z_i and LT_σ(f_i) = z_i for
/// the order from build_separating_order. Returns the first failure.
std::optional<std::string> separating_violation(const IdealPresentation& ideal, const std::vector<std::size_t>& z,
                                                const std::vector<Polynomial>& f);

/// Interreduces a plain homogeneous tuple into a coherent one generating
/// the same ideal.
SeparatingTuple coherify(const SeparatingTuple& tuple, const GradedRing& ring);

/// Indeterminates x_i for which a homogeneous x_i-separating polynomial
/// exists in I, in ring order.
std::vector<std::size_t> separating_indeterminates(const IdealPresentation& ideal);

struct Elimination {
  std::vector<Polynomial> rewritten;  // one per generator of I, zeros kept, original ring
  std::vector<long> mapping;          // old index -> index in the target ring, or -1
  IdealPresentation ideal;            // generators of I ∩ K[X \ Z] in the target ring
};

/// Elimination by substitution. Verifies that F is coherent and contained
/// in I before rewriting.
Elimination rewrite_eliminate(const IdealPresentation& ideal, const std::vector<std::size_t>& z,
                              const std::vector<Polynomial>& f);

Optimality optimality_status(const IdealPresentation& ideal, const std::vector<std::size_t>& z);

}  // namespace reembed
