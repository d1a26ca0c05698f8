#include "reembed/separating.hpp"

#include "reembed/groebner.hpp"

#include <algorithm>
#include <set>

namespace reembed {

std::string_view to_string(Optimality o) {
  return o == Optimality::OptimalByLinpart ? "optimal-by-linpart" : "inconclusive";
}

LinPartSpace lin_part_space(const IdealPresentation& ideal) {
  const std::size_t n = ideal.ring().size();
  LinPartSpace out;
  for (const auto& g : ideal.generators()) {
    std::vector<Rational> row(n, Rational(0));
    for (const auto& [m, c] : g.terms()) {
      if (m.is_one()) throw MathError(ErrorCode::Precondition, "generator with nonzero constant term");
      if (m.total_degree() != 1) continue;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 1) row[i] = c;
      }
    }
    out.coefficients.push_back(std::move(row));
  }
  DenseMatrix<Rational> echelon = out.coefficients;
  const auto pivots = rref(echelon);
  out.dimension = pivots.size();
  echelon.resize(out.dimension);
  out.basis = std::move(echelon);
  return out;
}

bool top_rank_check(const IdealPresentation& ideal, const std::vector<std::size_t>& z) {
  for (auto i : z) {
    if (i >= ideal.ring().size() || ideal.ring().is_degree_zero(i)) return false;
  }
  const auto space = lin_part_space(ideal);
  if (z.size() > space.dimension) return false;
  DenseMatrix<Rational> cols;
  for (const auto& row : space.coefficients) {
    std::vector<Rational> r;
    for (auto i : z) r.push_back(row[i]);
    cols.push_back(std::move(r));
  }
  return rank(cols) == z.size();
}

ZLinearData z_linear_data(const Polynomial& g, const GradedRing& ring, const std::vector<std::size_t>& z) {
  if (!ring.is_homogeneous(g)) throw MathError(ErrorCode::NotHomogeneous, "z_linear_data needs a homogeneous input");
  for (auto i : z) {
    if (i >= ring.size() || ring.is_degree_zero(i)) {
      throw MathError(ErrorCode::Precondition, "Z must consist of indeterminates of positive degree");
    }
  }
  std::vector<std::vector<Polynomial::Term>> parts(z.size());
  std::vector<Polynomial::Term> lin;
  std::vector<Polynomial::Term> rest;
  for (const auto& [m, c] : g.terms()) {
    bool placed = false;
    for (std::size_t k = 0; k < z.size() && !placed; ++k) {
      if (m[z[k]] != 1) continue;
      const Monomial t = m.without(z[k]);
      bool in_p0 = true;
      for (std::size_t i = 0; i < t.size(); ++i) in_p0 = in_p0 && (t[i] == 0 || ring.is_degree_zero(i));
      if (!in_p0) continue;
      parts[k].emplace_back(t, c);
      lin.emplace_back(m, c);
      placed = true;
    }
    if (!placed) rest.emplace_back(m, c);
  }
  ZLinearData out;
  out.lin = Polynomial::from_terms(std::move(lin));
  out.rest = Polynomial::from_terms(std::move(rest));
  for (auto& p : parts) out.cvec.push_back(Polynomial::from_terms(std::move(p)));
  return out;
}

std::vector<std::size_t> normalize_z(const GradedRing& ring, std::vector<std::size_t> z) {
  if (z.empty()) throw MathError(ErrorCode::Precondition, "Z is empty");
  std::set<std::size_t> seen;
  for (auto i : z) {
    if (i >= ring.size()) throw MathError(ErrorCode::Precondition, "Z index out of range");
    if (ring.is_degree_zero(i)) {
      throw MathError(ErrorCode::Precondition, "Z contains the degree-zero indeterminate " + ring.name(i));
    }
    if (!seen.insert(i).second) throw MathError(ErrorCode::Precondition, "Z has repeated entries");
  }
  std::stable_sort(z.begin(), z.end(), [&](std::size_t a, std::size_t b) { return ring.weight(a) < ring.weight(b); });
  return z;
}

std::optional<std::string> separating_violation(const IdealPresentation& ideal, const std::vector<std::size_t>& z,
                                                const std::vector<Polynomial>& f) {
  if (z.size() != f.size()) return "Z and F have different lengths";
  const auto& ring = ideal.ring();
  std::vector<std::size_t> zs = normalize_z(ring, z);
  const TermOrder sigma = build_separating_order(ring, zs);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const std::string tag = "f_" + std::to_string(i + 1);
    if (f[i].is_zero()) return tag + " is zero";
    const auto d = ring.w_degree(f[i]);
    if (!d.homogeneous() || d.value != ring.weight(z[i])) return tag + " is not homogeneous of degree deg(z_i)";
    if (!(z_linear_data(f[i], ring, z).lin == Polynomial::variable(z[i]))) return tag + " has Z-linear part != z_i";
    if (!(leading_monomial(f[i], sigma) == Monomial::variable(z[i]))) return tag + " has leading term != z_i";
    if (!ideal.contains(f[i])) return tag + " is not in I";
  }
  return std::nullopt;
}

std::optional<SeparatingTuple> try_find_separating_tuple(const IdealPresentation& ideal,
                                                         const std::vector<std::size_t>& z_in) {
  ideal.require_positive_homogeneous();
  const auto& ring = ideal.ring();
  const std::vector<std::size_t> z = normalize_z(ring, z_in);
  if (!top_rank_check(ideal, z)) return std::nullopt;

  SeparatingTuple out;
  out.z = z;
  const TermOrder p0_order = TermOrder::degrevlex(ring.size());
  std::size_t start = 0;
  while (start < z.size()) {
    const std::int64_t d = ring.weight(z[start]);
    std::size_t end = start;
    while (end < z.size() && ring.weight(z[end]) == d) ++end;
    const std::vector<std::size_t> zd(z.begin() + static_cast<std::ptrdiff_t>(start),
                                      z.begin() + static_cast<std::ptrdiff_t>(end));
    const auto gd = ideal.generators_of_degree(d);
    if (gd.empty()) return std::nullopt;
    std::vector<PolyVector<Rational>> cols;
    for (const auto& g : gd) cols.push_back(z_linear_data(g, ring, zd).cvec);
    const ModuleLifter<Rational> lifter(cols, zd.size(), p0_order);
    for (std::size_t k = 0; k < zd.size(); ++k) {
      PolyVector<Rational> e(zd.size());
      e[k] = Polynomial(1L);
      const auto c = lifter.lift(e);
      if (!c) return std::nullopt;
      Polynomial f;
      for (std::size_t j = 0; j < gd.size(); ++j) f += (*c)[j] * gd[j];
      out.f.push_back(std::move(f));
    }
    start = end;
  }
  out.order = build_separating_order(ring, z);
  if (auto bad = separating_violation(ideal, out.z, out.f)) {
    throw MathError(ErrorCode::VerificationFailed, "separating tuple failed verification: " + *bad);
  }
  return out;
}

SeparatingTuple find_separating_tuple(const IdealPresentation& ideal, const std::vector<std::size_t>& z) {
  auto t = try_find_separating_tuple(ideal, z);
  if (!t) throw MathError(ErrorCode::NotSeparating, std::string(kNotSeparating));
  return *t;
}

SeparatingTuple coherify(const SeparatingTuple& tuple, const GradedRing& ring) {
  if (tuple.z.size() != tuple.f.size()) throw MathError(ErrorCode::Precondition, "Z and F have different lengths");
  std::vector<std::size_t> perm(tuple.z.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return ring.weight(tuple.z[a]) < ring.weight(tuple.z[b]); });
  SeparatingTuple out;
  for (auto p : perm) {
    out.z.push_back(tuple.z[p]);
    out.f.push_back(tuple.f[p]);
  }
  for (std::size_t i = 0; i < out.f.size(); ++i) {
    auto& fi = out.f[i];
    const auto c = fi.coefficient(Monomial::variable(out.z[i]));
    if (c.is_zero()) throw MathError(ErrorCode::Precondition, "f_i does not contain z_i");
    fi = fi.scaled(c.inverse());
    const Polynomial zi = Polynomial::variable(out.z[i]);
    // Rewrite the tail with the earlier (already coherent) entries, then
    // with the later ones of the same degree.
    std::vector<std::size_t> others;
    std::vector<Polynomial> others_f;
    for (std::size_t j = 0; j < out.f.size(); ++j) {
      if (j == i) continue;
      if (j > i && ring.weight(out.z[j]) != ring.weight(out.z[i])) continue;
      others.push_back(out.z[j]);
      others_f.push_back(out.f[j]);
    }
    if (others.empty()) continue;
    const Polynomial tail = zi - fi;
    fi = zi - rewrite_tuple(std::vector<Polynomial>{tail}, others, others_f)[0];
  }
  if (auto bad = coherence_violation(out.z, out.f)) {
    throw MathError(ErrorCode::VerificationFailed, "coherify: " + *bad);
  }
  out.kind = TupleKind::Coherent;
  out.order = build_separating_order(ring, normalize_z(ring, out.z));
  return out;
}

std::vector<std::size_t> separating_indeterminates(const IdealPresentation& ideal) {
  ideal.require_positive_homogeneous();
  const auto& ring = ideal.ring();
  std::vector<std::size_t> out;
  for (auto i : ring.positive_indices()) {
    std::vector<Polynomial> coeffs;
    for (const auto& g : ideal.generators_of_degree(ring.weight(i))) {
      auto c = z_linear_data(g, ring, {i}).cvec[0];
      if (!c.is_zero()) coeffs.push_back(std::move(c));
    }
    if (coeffs.empty()) continue;
    if (Ideal(coeffs, ring.size()).is_unit()) out.push_back(i);
  }
  return out;
}

Elimination rewrite_eliminate(const IdealPresentation& ideal, const std::vector<std::size_t>& z,
                              const std::vector<Polynomial>& f) {
  if (auto bad = coherence_violation(z, f)) throw MathError(ErrorCode::Precondition, "F is not coherent: " + *bad);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!ideal.contains(f[i])) {
      throw MathError(ErrorCode::Precondition, "f_" + std::to_string(i + 1) + " is not in I");
    }
  }
  Elimination out;
  out.rewritten = rewrite_tuple(ideal.generators(), z, f);
  std::vector<bool> keep(ideal.ring().size(), true);
  for (auto i : z) keep.at(i) = false;
  GradedRing target = ideal.ring().keep(keep, &out.mapping);
  std::vector<Polynomial> gens;
  for (const auto& g : out.rewritten) {
    if (!g.is_zero()) gens.push_back(g.remap(out.mapping));
  }
  out.ideal = IdealPresentation(std::move(target), std::move(gens));
  return out;
}

Optimality optimality_status(const IdealPresentation& ideal, const std::vector<std::size_t>& z) {
  return z.size() == lin_part_space(ideal).dimension ? Optimality::OptimalByLinpart : Optimality::Inconclusive;
}

}  // namespace reembed
