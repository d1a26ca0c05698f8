#include "reembed/ump.hpp"

#include "reembed/linear_algebra.hpp"
#include "reembed/rational_function.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace reembed {

namespace {

std::size_t span_of(const PolyMatrix& m) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) n = std::max(n, m(i, j).variable_span());
  }
  return n;
}

std::set<std::size_t> variables_of(const PolyMatrix& m) {
  std::set<std::size_t> vs;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const auto& [mono, c] : m(i, j).terms()) {
        for (std::size_t v = 0; v < mono.size(); ++v) {
          if (mono[v] > 0) vs.insert(v);
        }
      }
    }
  }
  return vs;
}

std::int64_t total_degree(const Polynomial& p) {
  std::int64_t d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, static_cast<std::int64_t>(m.total_degree()));
  return d;
}

void swap_columns(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

/// col_dst -= f * col_src
void add_column(PolyMatrix& m, std::size_t dst, std::size_t src, const Polynomial& f) {
  if (f.is_zero()) return;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m(r, src).is_zero()) m(r, dst) -= f * m(r, src);
  }
}

void scale_column(PolyMatrix& m, std::size_t c, const Rational& s) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = m(r, c).scaled(s);
}

/// Unimodular column operations on (A | U) bringing A to (I_k | 0).
std::optional<PolyMatrix> column_reduction(const PolyMatrix& a) {
  const std::size_t k = a.rows();
  const std::size_t l = a.cols();
  const std::size_t n = span_of(a);
  const bool univariate = variables_of(a).size() <= 1;
  const TermOrder order = TermOrder::degrevlex(n);
  PolyMatrix m = a;
  PolyMatrix u = PolyMatrix::identity(l);
  auto swap_both = [&](std::size_t x, std::size_t y) {
    swap_columns(m, x, y);
    swap_columns(u, x, y);
  };
  auto add_both = [&](std::size_t dst, std::size_t src, const Polynomial& f) {
    add_column(m, dst, src, f);
    add_column(u, dst, src, f);
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t guard = 0;; ++guard) {
      if (guard > 1000) return std::nullopt;
      std::vector<std::size_t> nz;
      for (std::size_t j = i; j < l; ++j) {
        if (!m(i, j).is_zero()) nz.push_back(j);
      }
      if (nz.empty()) return std::nullopt;
      auto unit = std::find_if(nz.begin(), nz.end(), [&](std::size_t j) { return m(i, j).is_constant(); });
      if (unit != nz.end()) {
        swap_both(i, *unit);
        const Rational inv = m(i, i).constant_value().inverse();
        scale_column(m, i, inv);
        scale_column(u, i, inv);
        for (std::size_t j = 0; j < l; ++j) {
          if (j != i) add_both(j, i, Polynomial(m(i, j)));
        }
        break;
      }
      if (univariate) {
        const auto p = *std::min_element(nz.begin(), nz.end(), [&](std::size_t x, std::size_t y) {
          return total_degree(m(i, x)) < total_degree(m(i, y));
        });
        swap_both(i, p);
        bool progress = false;
        for (std::size_t j = i + 1; j < l; ++j) {
          if (m(i, j).is_zero()) continue;
          const Polynomial r = normal_form(m(i, j), std::vector<Polynomial>{m(i, i)}, order);
          add_both(j, i, exact_quotient(m(i, j) - r, m(i, i)));
          progress = true;
        }
        if (!progress) return std::nullopt;  // non-constant gcd
        continue;
      }
      // An entry that is a nonzero constant modulo the others.
      bool reduced = false;
      for (std::size_t x = 0; x < nz.size() && !reduced && nz.size() > 1; ++x) {
        std::vector<Polynomial> others;
        std::vector<std::size_t> cols;
        for (auto j : nz) {
          if (j == nz[x]) continue;
          others.push_back(m(i, j));
          cols.push_back(j);
        }
        const Polynomial r = Ideal(others, n).reduce(m(i, nz[x]));
        if (r.is_zero() || !r.is_constant()) continue;
        std::vector<PolyVector<Rational>> gens;
        for (const auto& o : others) gens.push_back({o});
        const auto c = ModuleLifter<Rational>(gens, 1, order).lift({m(i, nz[x]) - r});
        if (!c) continue;
        for (std::size_t t = 0; t < cols.size(); ++t) add_both(nz[x], cols[t], (*c)[t]);
        reduced = true;
      }
      if (reduced) continue;
      // Comaximal pair: [[u, -q], [v, p]] has determinant up + vq = 1.
      bool paired = false;
      for (std::size_t x = 0; x < nz.size() && !paired; ++x) {
        for (std::size_t y = x + 1; y < nz.size() && !paired; ++y) {
          const Polynomial p = m(i, nz[x]);
          const Polynomial q = m(i, nz[y]);
          const ModuleLifter<Rational> lifter({{p}, {q}}, 1, order);
          const auto c = lifter.lift({Polynomial(1L)});
          if (!c) continue;
          const PolyMatrix mm = m;
          const PolyMatrix uu = u;
          for (std::size_t r = 0; r < k; ++r) {
            m(r, nz[x]) = (*c)[0] * mm(r, nz[x]) + (*c)[1] * mm(r, nz[y]);
            m(r, nz[y]) = -q * mm(r, nz[x]) + p * mm(r, nz[y]);
          }
          for (std::size_t r = 0; r < l; ++r) {
            u(r, nz[x]) = (*c)[0] * uu(r, nz[x]) + (*c)[1] * uu(r, nz[y]);
            u(r, nz[y]) = -q * uu(r, nz[x]) + p * uu(r, nz[y]);
          }
          paired = true;
        }
      }
      if (!paired) return std::nullopt;
    }
  }
  return u;
}

/// C from membership lifts, then a syzygy Groebner basis as the remaining
/// columns if it has exactly l - k elements.
std::optional<PolyMatrix> syzygy_basis(const PolyMatrix& a) {
  const std::size_t k = a.rows();
  const std::size_t l = a.cols();
  std::vector<PolyVector<Rational>> cols;
  for (std::size_t j = 0; j < l; ++j) cols.push_back(a.column(j));
  const ModuleLifter<Rational> lifter(cols, k, TermOrder::degrevlex(span_of(a)));
  PolyMatrix b(l, l);
  for (std::size_t j = 0; j < k; ++j) {
    PolyVector<Rational> e(k);
    e[j] = Polynomial(1L);
    const auto c = lifter.lift(e);
    if (!c) return std::nullopt;
    for (std::size_t r = 0; r < l; ++r) b(r, j) = (*c)[r];
  }
  const auto syz = lifter.syzygies();
  if (syz.size() != l - k) return std::nullopt;
  for (std::size_t s = 0; s < syz.size(); ++s) {
    for (std::size_t r = 0; r < l; ++r) b(r, k + s) = syz[s][r];
  }
  return b;
}

/// Makes det(B) = 1 by rescaling the last column (needs l > k and a
/// constant determinant).
std::optional<PolyMatrix> normalize_det(PolyMatrix b, std::size_t k) {
  const Polynomial d = determinant(b);
  if (d.is_zero() || !d.is_constant()) return std::nullopt;
  if (b.cols() > k) scale_column(b, b.cols() - 1, d.constant_value().inverse());
  return b;
}

std::optional<PolyMatrix> try_strategies(const PolyMatrix& a, std::string& which) {
  if (auto u = column_reduction(a)) {
    if (auto b = normalize_det(*u, a.rows()); b && !ump_violation(a, *b)) {
      which = "column-reduction";
      return b;
    }
  }
  if (auto c = syzygy_basis(a)) {
    if (auto b = normalize_det(*c, a.rows()); b && !ump_violation(a, *b)) {
      which = "syzygy-basis";
      return b;
    }
  }
  return std::nullopt;
}

std::vector<Polynomial> identity_images(std::size_t n) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Polynomial::variable(i));
  return v;
}

std::int64_t degree_of(const GradedRing& ring, const Polynomial& g) { return ring.w_degree(g).value; }

}  // namespace

PolyMatrix linear_coefficient_matrix(const GradedRing& ring, const std::vector<Polynomial>& gens) {
  const auto pos = ring.positive_indices();
  PolyMatrix h(gens.size(), pos.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto data = z_linear_data(gens[i], ring, pos);
    for (std::size_t j = 0; j < pos.size(); ++j) h(i, j) = data.cvec[j];
  }
  return h;
}

bool is_unimodular(const PolyMatrix& a) {
  if (a.rows() == 0) return true;
  if (a.rows() > a.cols()) return false;
  return Ideal(maximal_minors(a), span_of(a)).is_unit();
}

std::optional<std::string> ump_violation(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t k = a.rows();
  const std::size_t l = a.cols();
  if (b.rows() != l || b.cols() != l) return "B has the wrong size";
  const PolyMatrix ab = a * b;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      const auto& x = ab(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return "A*B is not (I_k | 0)";
    }
  }
  // For k = l, B = A^{-1} and det(B) = 1/det(A) is only a unit.
  const Polynomial d = determinant(b);
  if (k < l ? !d.is_one() : !(d.is_constant() && !d.is_zero())) return "det(B) != 1";
  return std::nullopt;
}

UMPSolution ump_solve(const PolyMatrix& a, const UmpOptions& options) {
  if (!is_unimodular(a)) throw MathError(ErrorCode::NotUnimodular, "the matrix is not unimodular");
  UMPSolution out;
  if (a.rows() == 0) {
    out.b = PolyMatrix::identity(a.cols());
    out.strategy = "identity";
    return out;
  }
  if (auto b = try_strategies(a, out.strategy)) {
    out.b = std::move(*b);
    return out;
  }
  // Random unipotent change of coordinates s on P0, inverse t.
  const auto used = variables_of(a);
  const std::vector<std::size_t> vs(used.begin(), used.end());
  const std::size_t n = span_of(a);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (unsigned attempt = 1; vs.size() > 1 && attempt <= options.coordinate_changes; ++attempt) {
    auto s = identity_images(n);
    std::vector<std::vector<long>> c(vs.size(), std::vector<long>(vs.size(), 0));
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        c[i][j] = coef(rng);
        s[vs[i]] += Polynomial::variable(vs[j]).scaled(Rational(c[i][j]));
      }
    }
    auto t = identity_images(n);
    for (std::size_t i = vs.size(); i-- > 0;) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) t[vs[i]] -= t[vs[j]].scaled(Rational(c[i][j]));
    }
    std::string which;
    if (auto b = try_strategies(a.substitute(s), which)) {
      PolyMatrix back = b->substitute(t);
      if (!ump_violation(a, back)) {
        out.b = std::move(back);
        out.strategy = "coordinate-change:" + std::to_string(attempt) + ":" + which;
        return out;
      }
    }
  }
  throw MathError(ErrorCode::QsIncomplete, "no free syzygy basis found by the implemented strategies");
}

UmpReembedding ump_reembed(const IdealPresentation& ideal, std::size_t k,
                           const std::map<std::int64_t, PolyMatrix>& fixtures, const UmpOptions& options) {
  ideal.require_positive_homogeneous();
  const auto& ring = ideal.ring();
  const std::size_t n = ring.size();
  const auto& gens = ideal.generators();
  const auto pos = ring.positive_indices();
  if (k > gens.size() || k > pos.size()) {
    throw MathError(ErrorCode::Precondition, "k exceeds the number of generators or of positive indeterminates");
  }

  UmpReembedding out;
  for (std::size_t i = 0; i < k; ++i) out.generator_order.push_back(i);
  std::stable_sort(out.generator_order.begin(), out.generator_order.end(),
                   [&](std::size_t x, std::size_t y) { return degree_of(ring, gens[x]) < degree_of(ring, gens[y]); });
  std::vector<Polynomial> lead;
  for (auto i : out.generator_order) lead.push_back(gens[i]);

  std::map<std::int64_t, std::vector<std::size_t>> blocks;
  for (auto i : pos) blocks[ring.weight(i)].push_back(i);
  for (const auto& g : lead) {
    if (blocks.count(degree_of(ring, g)) == 0) {
      throw MathError(ErrorCode::NotUnimodular, "a leading generator has no linear part");
    }
  }

  std::vector<Polynomial> phi = identity_images(n);
  std::vector<Polynomial> phi_inv = identity_images(n);
  for (const auto& [d, block] : blocks) {
    std::vector<Polynomial> rows;
    for (const auto& g : lead) {
      if (degree_of(ring, g) == d) rows.push_back(g);
    }
    if (rows.empty() && fixtures.count(d) == 0) continue;
    PolyMatrix a(rows.size(), block.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto c = z_linear_data(rows[i], ring, block).cvec;
      for (std::size_t j = 0; j < block.size(); ++j) a(i, j) = c[j];
    }
    UMPSolution sol;
    if (auto it = fixtures.find(d); it != fixtures.end()) {
      if (auto bad = ump_violation(a, it->second)) {
        throw MathError(ErrorCode::VerificationFailed, "fixture for degree " + std::to_string(d) + ": " + *bad);
      }
      sol = {it->second, UmpSource::Fixture, "fixture"};
    } else {
      if (!is_unimodular(a)) {
        throw MathError(ErrorCode::NotUnimodular,
                        "the coefficient matrix in degree " + std::to_string(d) + " is not unimodular");
      }
      sol = ump_solve(a, options);
    }
    const PolyMatrix& b = sol.b;
    const Rational det = determinant(b).constant_value();
    const PolyMatrix inv = adjugate(b);
    for (std::size_t j = 0; j < block.size(); ++j) {
      Polynomial f;
      Polynomial g;
      for (std::size_t l = 0; l < block.size(); ++l) {
        f += b(j, l) * Polynomial::variable(block[l]);
        g += inv(j, l).scaled(det.inverse()) * Polynomial::variable(block[l]);
      }
      phi[block[j]] = std::move(f);
      phi_inv[block[j]] = std::move(g);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) out.nu.push_back(block[i]);
    if (!rows.empty()) out.blocks.emplace(d, std::move(sol));
  }
  out.phi = {ring, ring, phi, phi_inv};
  for (std::size_t i = 0; i < n; ++i) {
    if (!(Polynomial::variable(i).substitute(phi_inv).substitute(phi) == Polynomial::variable(i))) {
      throw MathError(ErrorCode::VerificationFailed, "phi is not an automorphism");
    }
  }

  // ν follows the sorted leading generators block by block; lead is sorted
  // by degree, so positions agree.
  std::vector<Polynomial> fhat = identity_images(n);
  std::vector<Polynomial> coherent;
  for (std::size_t i = 0; i < lead.size(); ++i) {
    const Polynomial xnu = Polynomial::variable(out.nu[i]);
    const Polynomial pg = out.phi.apply(lead[i]);
    const Polynomial q = xnu - pg;
    for (const auto& [m, c] : q.terms()) {
      if (m[out.nu[i]] > 0) throw MathError(ErrorCode::VerificationFailed, "phi(g_i) is not x_nu - q");
    }
    const std::vector<std::size_t> earlier(out.nu.begin(), out.nu.begin() + static_cast<std::ptrdiff_t>(i));
    const Polynomial qt = earlier.empty() ? q : rewrite_tuple(std::vector<Polynomial>{q}, earlier, coherent)[0];
    coherent.push_back(xnu - qt);
    out.qtilde.push_back(qt);
    fhat[out.nu[i]] = qt;
  }

  std::vector<bool> keep(n, true);
  for (auto v : out.nu) keep[v] = false;
  std::vector<long> mapping;
  GradedRing target = ring.keep(keep, &mapping);
  for (auto& f : fhat) f = f.remap(mapping);
  out.fhat = fhat;

  std::vector<Polynomial> t;
  for (std::size_t i = 0; i < n; ++i) t.push_back(phi[i].substitute(fhat));
  std::vector<Polynomial> back;
  for (std::size_t i = 0; i < n; ++i) {
    if (keep[i]) back.push_back(phi_inv[i]);
  }
  out.theta = {ring, target, t, back};
  for (std::size_t j = 0; j < back.size(); ++j) {
    if (!(out.theta.apply(back[j]) == Polynomial::variable(j))) {
      throw MathError(ErrorCode::VerificationFailed, "theta does not invert on the kept indeterminates");
    }
  }
  for (const auto& g : lead) {
    if (!out.theta.apply(g).is_zero()) throw MathError(ErrorCode::VerificationFailed, "theta(g_i) != 0 for i <= k");
  }
  std::vector<Polynomial> j_gens;
  for (std::size_t i = k; i < gens.size(); ++i) j_gens.push_back(out.theta.apply(gens[i]));
  out.target = IdealPresentation(std::move(target), std::move(j_gens));
  if (!out.target.is_homogeneous() || !out.theta.preserves_degrees()) {
    throw MathError(ErrorCode::VerificationFailed, "theta is not homogeneous of degree zero");
  }
  return out;
}

FreeReembedding regular_free_reembed(const IdealPresentation& ideal, const std::map<std::int64_t, PolyMatrix>& fixtures,
                                     const UmpOptions& options) {
  ideal.require_positive_homogeneous();
  const auto& ring = ideal.ring();
  std::vector<Polynomial> gens = ideal.generators();
  std::stable_sort(gens.begin(), gens.end(),
                   [&](const Polynomial& x, const Polynomial& y) { return degree_of(ring, x) < degree_of(ring, y); });

  std::map<std::int64_t, std::vector<std::size_t>> cols;
  for (auto i : ring.positive_indices()) cols[ring.weight(i)].push_back(i);

  FreeReembedding out;
  std::vector<Polynomial> basis_polys;
  std::set<std::string> strategies;
  for (const auto& [d, block] : cols) {
    std::vector<Polynomial> rows;
    for (const auto& g : gens) {
      if (degree_of(ring, g) == d) rows.push_back(g);
    }
    if (rows.empty()) continue;
    PolyMatrix h(rows.size(), block.size());
    DenseMatrix<RationalFunction> hl(rows.size(), std::vector<RationalFunction>(block.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto c = z_linear_data(rows[i], ring, block).cvec;
      for (std::size_t j = 0; j < block.size(); ++j) {
        h(i, j) = c[j];
        hl[i][j] = RationalFunction(c[j]);
      }
    }
    const std::size_t kd = rank(hl);
    if (kd == 0) continue;
    if (kd == rows.size()) {
      if (!is_unimodular(h)) {
        throw MathError(ErrorCode::NotUnimodular,
                        "the linear coefficient matrix in degree " + std::to_string(d) + " is not unimodular");
      }
      basis_polys.insert(basis_polys.end(), rows.begin(), rows.end());
      strategies.insert("rows");
      continue;
    }
    // Reduced Groebner basis of the row module, with lifts.
    std::vector<PolyVector<Rational>> vecs;
    for (std::size_t i = 0; i < rows.size(); ++i) vecs.push_back(h.row(i));
    const ModuleLifter<Rational> lifter(vecs, block.size(), TermOrder::degrevlex(ring.size()));
    const auto gb = lifter.basis_with_lift();
    if (gb.size() != kd) {
      throw MathError(ErrorCode::RowspaceNotFreeBasis,
                      "no free basis of the row space found in degree " + std::to_string(d));
    }
    PolyMatrix v(kd, block.size());
    for (std::size_t i = 0; i < kd; ++i) {
      for (std::size_t j = 0; j < block.size(); ++j) v(i, j) = gb[i].first[j];
    }
    if (!is_unimodular(v)) {
      throw MathError(ErrorCode::NotUnimodular,
                      "the row space basis in degree " + std::to_string(d) + " is not unimodular");
    }
    for (const auto& [head, coeffs] : gb) {
      Polynomial f;
      for (std::size_t j = 0; j < rows.size(); ++j) f += coeffs[j] * rows[j];
      basis_polys.push_back(std::move(f));
    }
    strategies.insert("module-basis");
  }
  for (const auto& s : strategies) {
    out.rowspace_strategy += (out.rowspace_strategy.empty() ? "" : ",") + s;
  }

  const std::size_t k = basis_polys.size();
  std::vector<Polynomial> all = basis_polys;
  all.insert(all.end(), gens.begin(), gens.end());
  out.reembedding = ump_reembed(IdealPresentation(ring, all), k, fixtures, options);
  if (!out.reembedding.target.generators().empty()) {
    throw MathError(ErrorCode::VerificationFailed, "the re-embedded ideal is not zero; P/I is not regular");
  }
  const auto dim = krull_dimension(ideal.ideal());
  if (!dim || *dim != out.reembedding.target.ring().size()) {
    throw MathError(ErrorCode::VerificationFailed, "dimension count of the free re-embedding fails");
  }
  out.weights = out.reembedding.target.ring().weights();
  for (auto i : ring.positive_indices()) out.images.push_back(out.reembedding.theta.images[i]);
  return out;
}

SmoothnessReport smoothness_check(const IdealPresentation& ideal, std::uint64_t seed) {
  const auto& ring = ideal.ring();
  const std::size_t n = ring.size();
  const auto& gens = ideal.generators();
  SmoothnessReport r;
  r.dimension = krull_dimension(ideal.ideal());
  if (!r.dimension) return r;  // unit ideal
  r.codimension = n - *r.dimension;
  if (r.codimension == 0) {
    r.verdict = Regularity::Regular;
    return r;
  }
  PolyMatrix jac(gens.size(), n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) jac(i, j) = gens[i].derivative(j);
  }
  if (r.codimension <= gens.size()) {
    std::vector<Polynomial> test = minors(jac, r.codimension);
    test.insert(test.end(), gens.begin(), gens.end());
    if (Ideal(test, n).is_unit()) {
      r.verdict = Regularity::Regular;
      return r;
    }
  }
  // Candidate witnesses (Γ, 0): Γ = 0 first, then random points.
  const auto a = ring.degree_zero_indices();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::vector<Rational> point(n, Rational(0));
    if (attempt > 0) {
      if (a.empty()) break;
      for (auto i : a) point[i] = Rational(coef(rng));
    }
    std::vector<Polynomial> at;
    for (const auto& c : point) at.emplace_back(c);
    bool on_variety = true;
    for (const auto& g : gens) on_variety = on_variety && g.substitute(at).is_zero();
    if (!on_variety) continue;
    DenseMatrix<Rational> j(gens.size(), std::vector<Rational>(n));
    for (std::size_t x = 0; x < gens.size(); ++x) {
      for (std::size_t y = 0; y < n; ++y) j[x][y] = jac(x, y).substitute(at).constant_value();
    }
    if (rank(j) < r.codimension) {
      r.verdict = Regularity::SingularAtPoint;
      r.witness = point;
      return r;
    }
  }
  return r;
}

}  // namespace reembed
