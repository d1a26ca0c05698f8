#include "reembed/fibers.hpp"

#include "reembed/linear_algebra.hpp"

#include <algorithm>

namespace reembed {

namespace {

struct Split {
  GradedRing fiber_ring;
  std::vector<long> mapping;    // old index -> index in K[X+], or -1
  std::vector<std::size_t> a;   // degree-zero indices in ring order
};

Split split_ring(const GradedRing& ring) {
  Split s;
  std::vector<bool> keep(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) keep[i] = !ring.is_degree_zero(i);
  s.fiber_ring = ring.keep(keep, &s.mapping);
  s.a = ring.degree_zero_indices();
  return s;
}

Polynomial specialize(const Polynomial& f, const Split& s, const FiberPoint& gamma) {
  std::vector<Polynomial> images(s.mapping.size());
  for (std::size_t i = 0; i < s.mapping.size(); ++i) {
    if (s.mapping[i] >= 0) images[i] = Polynomial::variable(static_cast<std::size_t>(s.mapping[i]));
  }
  for (std::size_t k = 0; k < s.a.size(); ++k) images[s.a[k]] = Polynomial(gamma[k]);
  return f.substitute(images);
}

GenericPolynomial promote(const Polynomial& f, const Split& s) {
  std::vector<GenericPolynomial::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::uint32_t> params(s.a.size(), 0);
    for (std::size_t k = 0; k < s.a.size(); ++k) params[k] = m[s.a[k]];
    std::vector<std::uint32_t> rest(s.fiber_ring.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0 && s.mapping[i] >= 0) rest[static_cast<std::size_t>(s.mapping[i])] = m[i];
    }
    terms.emplace_back(Monomial(std::move(rest)), RationalFunction(Polynomial(Monomial(std::move(params)), c)));
  }
  return GenericPolynomial::from_terms(std::move(terms));
}

void check_point(const IdealPresentation& ideal, const FiberPoint& gamma) {
  ideal.require_positive_homogeneous();
  const auto m = ideal.ring().degree_zero_indices().size();
  if (gamma.size() != m) {
    throw MathError(ErrorCode::Precondition, "fiber point has " + std::to_string(gamma.size()) + " entries, expected " +
                                                 std::to_string(m));
  }
}

void check_coherent_for(const IdealPresentation& ideal, const SeparatingTuple& tuple) {
  if (auto bad = coherence_violation(tuple.z, tuple.f)) {
    throw MathError(ErrorCode::Precondition, "tuple is not coherent: " + *bad);
  }
  for (const auto& f : tuple.f) {
    if (!ideal.contains(f)) throw MathError(ErrorCode::Precondition, "tuple entry is not in I");
  }
}

template <class C>
void verify_fiber_tuple(const BasicPresentation<C>& fiber, const BasicSeparatingTuple<C>& t) {
  if (auto bad = coherence_violation(t.z, t.f)) {
    throw MathError(ErrorCode::VerificationFailed, "fiber tuple is not coherent: " + *bad);
  }
  for (const auto& f : t.f) {
    if (!fiber.contains(f)) throw MathError(ErrorCode::VerificationFailed, "fiber tuple entry is not in the fiber ideal");
  }
}

/// Linear-part re-embedding over any coefficient field, positive grading.
template <class C>
GenericReembedding linpart_reembed(const GenericPresentation& ideal) {
  const auto& ring = ideal.ring();
  const std::size_t n = ring.size();
  const auto& gens = ideal.generators();
  DenseMatrix<C> coeffs;
  for (const auto& g : gens) {
    std::vector<C> row(n, C(0));
    for (const auto& [m, c] : g.terms()) {
      if (m.total_degree() == 1) row[m.size() - 1] = c;
    }
    coeffs.push_back(std::move(row));
  }
  std::vector<std::size_t> chosen;
  DenseMatrix<C> rows;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    auto trial = rows;
    trial.push_back(coeffs[j]);
    if (rank(trial) == trial.size()) {
      rows = std::move(trial);
      chosen.push_back(j);
    }
  }
  const std::size_t s = chosen.size();
  for (std::size_t i = 0; i < s; ++i) {
    rows[i].resize(n + s, C(0));
    rows[i][n + i] = C(1);
  }
  const auto pivots = rref(rows);

  GenericReembedding out;
  std::vector<std::pair<std::size_t, BasicPolynomial<C>>> entries;
  for (std::size_t i = 0; i < s; ++i) {
    BasicPolynomial<C> f;
    for (std::size_t k = 0; k < s; ++k) {
      if (!rows[i][n + k].is_zero()) f += gens[chosen[k]].scaled(rows[i][n + k]);
    }
    entries.emplace_back(pivots[i], std::move(f));
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [&](const auto& x, const auto& y) { return ring.weight(x.first) < ring.weight(y.first); });
  for (auto& [z, f] : entries) {
    out.tuple.z.push_back(z);
    out.tuple.f.push_back(std::move(f));
  }
  // Coherify: rewrite each tail with the earlier entries and the later
  // ones of the same degree.
  auto& zs = out.tuple.z;
  auto& fs = out.tuple.f;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    std::vector<std::size_t> oz;
    std::vector<BasicPolynomial<C>> of;
    for (std::size_t j = 0; j < zs.size(); ++j) {
      if (j == i || (j > i && ring.weight(zs[j]) != ring.weight(zs[i]))) continue;
      oz.push_back(zs[j]);
      of.push_back(fs[j]);
    }
    const auto zi = BasicPolynomial<C>::variable(zs[i]);
    if (!oz.empty()) fs[i] = zi - rewrite_tuple(std::vector<BasicPolynomial<C>>{zi - fs[i]}, oz, of)[0];
  }
  out.tuple.kind = TupleKind::Coherent;
  verify_fiber_tuple(ideal, out.tuple);
  out.z = zs;

  std::vector<bool> keep(n, true);
  for (auto z : zs) keep[z] = false;
  std::vector<long> mapping;
  GradedRing target = ring.keep(keep, &mapping);
  std::vector<BasicPolynomial<C>> rest;
  for (const auto& g : rewrite_tuple(gens, zs, fs)) {
    if (!g.is_zero()) rest.push_back(g.remap(mapping));
  }
  out.target = GenericPresentation(std::move(target), std::move(rest));
  return out;
}

}  // namespace

std::string_view to_string(Regularity r) {
  switch (r) {
    case Regularity::Regular:
      return "regular";
    case Regularity::SingularAtPoint:
      return "singular";
    case Regularity::Undetermined:
      break;
  }
  return "undetermined";
}

IdealPresentation special_fiber_ideal(const IdealPresentation& ideal, const FiberPoint& gamma) {
  check_point(ideal, gamma);
  const auto s = split_ring(ideal.ring());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(specialize(g, s, gamma));
  return IdealPresentation(s.fiber_ring, std::move(gens));
}

GenericPresentation generic_fiber_ideal(const IdealPresentation& ideal) {
  ideal.require_positive_homogeneous();
  const auto s = split_ring(ideal.ring());
  if (s.a.empty()) throw MathError(ErrorCode::Precondition, "no degree-zero indeterminates");
  std::vector<std::string> params;
  for (auto i : s.a) params.push_back(ideal.ring().name(i));
  std::vector<GenericPolynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(promote(g, s));
  return GenericPresentation(s.fiber_ring.with_parameters(std::move(params)), std::move(gens));
}

SeparatingTuple fiber_coherent_tuple(const IdealPresentation& ideal, const SeparatingTuple& tuple,
                                     const FiberPoint& gamma) {
  const auto fiber = special_fiber_ideal(ideal, gamma);
  check_coherent_for(ideal, tuple);
  const auto s = split_ring(ideal.ring());
  SeparatingTuple out;
  out.kind = TupleKind::Coherent;
  for (std::size_t i = 0; i < tuple.z.size(); ++i) {
    out.z.push_back(static_cast<std::size_t>(s.mapping.at(tuple.z[i])));
    out.f.push_back(specialize(tuple.f[i], s, gamma));
  }
  verify_fiber_tuple(fiber, out);
  return out;
}

GenericSeparatingTuple fiber_coherent_tuple(const IdealPresentation& ideal, const SeparatingTuple& tuple) {
  const auto fiber = generic_fiber_ideal(ideal);
  check_coherent_for(ideal, tuple);
  const auto s = split_ring(ideal.ring());
  GenericSeparatingTuple out;
  out.kind = TupleKind::Coherent;
  for (std::size_t i = 0; i < tuple.z.size(); ++i) {
    out.z.push_back(static_cast<std::size_t>(s.mapping.at(tuple.z[i])));
    out.f.push_back(promote(tuple.f[i], s));
  }
  verify_fiber_tuple(fiber, out);
  return out;
}

ReembeddingResult fiber_optimal_reembedding(const IdealPresentation& ideal, const FiberPoint& gamma) {
  return positively_graded_optimal(special_fiber_ideal(ideal, gamma));
}

GenericReembedding fiber_optimal_reembedding(const IdealPresentation& ideal) {
  return linpart_reembed<RationalFunction>(generic_fiber_ideal(ideal));
}

FiberReport cotangent_report(const IdealPresentation& ideal, const FiberPoint& gamma) {
  FiberReport r;
  r.fiber = special_fiber_ideal(ideal, gamma);
  const auto& ring = ideal.ring();
  const std::size_t n = ring.size();
  const auto s = split_ring(ring);
  r.parameters = s.a.size();
  r.fiber_cotangent = r.fiber.ring().size() - lin_part_space(r.fiber).dimension;

  std::vector<Polynomial> point(n);
  for (std::size_t k = 0; k < s.a.size(); ++k) point[s.a[k]] = Polynomial(gamma[k]);
  DenseMatrix<Rational> jac;
  for (const auto& g : ideal.generators()) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(g.derivative(j).substitute(point).constant_value());
    jac.push_back(std::move(row));
  }
  r.jacobian_rank = rank(jac);
  r.ambient_cotangent = n - r.jacobian_rank;
  if (r.ambient_cotangent != r.fiber_cotangent + r.parameters) {
    throw MathError(ErrorCode::VerificationFailed, "cotangent dimensions do not differ by m");
  }

  r.fiber_dimension = krull_dimension(r.fiber.ideal());
  r.ambient_dimension = krull_dimension(ideal.ideal());
  if (r.fiber_dimension && r.fiber_cotangent > *r.fiber_dimension) {
    r.regularity = Regularity::SingularAtPoint;
  } else if (r.fiber_dimension && r.ambient_dimension && r.jacobian_rank + *r.ambient_dimension == n &&
             *r.fiber_dimension + r.parameters == *r.ambient_dimension) {
    r.regularity = Regularity::Regular;
  }
  // A positively graded algebra is free exactly when its optimal
  // re-embedding has no relations left.
  r.fiber_free = positively_graded_optimal(r.fiber).target.generators().empty();
  return r;
}

}  // namespace reembed
