#pragma once

#include "reembed/polynomial.hpp"
#include "reembed/term_order.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace reembed {

/// Element of a free module P^s, one polynomial per component.
template <class C>
using PolyVector = std::vector<BasicPolynomial<C>>;

enum class PositionRule {
  PositionOverTerm,  // compare components first; component 0 is largest
  TermOverPosition,
};

struct ModuleOrder {
  TermOrder order = TermOrder::degrevlex(0);
  PositionRule rule = PositionRule::PositionOverTerm;
};

namespace detail {

template <class C>
struct MTerm {
  Monomial m;
  std::uint32_t comp;
  C c;
};

/// Module element with terms in *ascending* order, so the leading term is
/// back().
template <class C>
using MPoly = std::vector<MTerm<C>>;

class MCompare {
 public:
  explicit MCompare(const ModuleOrder& o) : o_(&o) {}
  int operator()(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (o_->rule == PositionRule::PositionOverTerm) {
      if (ca != cb) return ca < cb ? 1 : -1;
      return o_->order.compare(a, b);
    }
    const int c = o_->order.compare(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

 private:
  const ModuleOrder* o_;
};

template <class C>
MPoly<C> to_mpoly(const PolyVector<C>& v, const MCompare& cmp) {
  MPoly<C> out;
  for (std::uint32_t k = 0; k < v.size(); ++k) {
    for (const auto& [m, c] : v[k].terms()) out.push_back({m, k, c});
  }
  std::sort(out.begin(), out.end(),
            [&](const MTerm<C>& a, const MTerm<C>& b) { return cmp(a.m, a.comp, b.m, b.comp) < 0; });
  return out;
}

template <class C>
PolyVector<C> from_mpoly(const MPoly<C>& p, std::size_t rank) {
  std::vector<std::vector<typename BasicPolynomial<C>::Term>> parts(rank);
  for (const auto& t : p) parts.at(t.comp).emplace_back(t.m, t.c);
  PolyVector<C> out;
  out.reserve(rank);
  for (auto& ts : parts) out.push_back(BasicPolynomial<C>::from_terms(std::move(ts)));
  return out;
}

/// p - c * m * q, all ascending.
template <class C>
MPoly<C> sub_mul(const MPoly<C>& p, const C& c, const Monomial& m, const MPoly<C>& q, const MCompare& cmp) {
  MPoly<C> out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<MTerm<C>> pending;
  auto next_q = [&]() {
    MTerm<C> t{q[j].m * m, q[j].comp, -(q[j].c * c)};
    ++j;
    return t;
  };
  while (i < p.size() || j < q.size() || pending) {
    if (!pending && j < q.size()) pending = next_q();
    if (i == p.size()) {
      out.push_back(std::move(*pending));
      pending.reset();
      continue;
    }
    if (!pending) {
      out.push_back(p[i++]);
      continue;
    }
    const int r = cmp(p[i].m, p[i].comp, pending->m, pending->comp);
    if (r < 0) {
      out.push_back(p[i++]);
    } else if (r > 0) {
      out.push_back(std::move(*pending));
      pending.reset();
    } else {
      C s = p[i].c + pending->c;
      if (!s.is_zero()) out.push_back({p[i].m, p[i].comp, std::move(s)});
      ++i;
      pending.reset();
    }
  }
  return out;
}

template <class C>
void make_monic(MPoly<C>& p) {
  if (p.empty() || p.back().c.is_one()) return;
  const C inv = p.back().c.inverse();
  for (auto& t : p) t.c *= inv;
}

/// Index into `basis` of the first element whose leading term divides (m, comp).
template <class C>
std::optional<std::size_t> find_divisor(const std::vector<const MPoly<C>*>& basis, const Monomial& m,
                                        std::uint32_t comp) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& lt = basis[k]->back();
    if (lt.comp == comp && lt.m.divides(m)) return k;
  }
  return std::nullopt;
}

template <class C>
MPoly<C> top_reduce(MPoly<C> p, const std::vector<const MPoly<C>*>& basis, const MCompare& cmp) {
  while (!p.empty()) {
    const auto& lt = p.back();
    auto k = find_divisor(basis, lt.m, lt.comp);
    if (!k) break;
    const auto& b = *basis[*k];
    const C factor = lt.c / b.back().c;
    const Monomial shift = lt.m / b.back().m;
    p = sub_mul(p, factor, shift, b, cmp);
  }
  return p;
}

template <class C>
MPoly<C> full_reduce(MPoly<C> p, const std::vector<const MPoly<C>*>& basis, const MCompare& cmp) {
  MPoly<C> rest;  // collected in descending order
  while (!p.empty()) {
    const auto& lt = p.back();
    auto k = find_divisor(basis, lt.m, lt.comp);
    if (!k) {
      rest.push_back(std::move(p.back()));
      p.pop_back();
      continue;
    }
    const auto& b = *basis[*k];
    const C factor = lt.c / b.back().c;
    const Monomial shift = lt.m / b.back().m;
    p = sub_mul(p, factor, shift, b, cmp);
  }
  std::reverse(rest.begin(), rest.end());
  return rest;
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t comp;
};

/// Buchberger's algorithm with the Gebauer-Moeller installation of pairs
/// and normal selection. Returns the reduced basis, monic, ascending by
/// leading term.
template <class C>
std::vector<MPoly<C>> buchberger(std::vector<MPoly<C>> input, std::size_t rank, const MCompare& cmp) {
  std::vector<MPoly<C>> store;
  std::vector<std::size_t> g;  // active basis, indices into store
  std::vector<CriticalPair> pairs;
  const bool product_criterion = rank == 1;

  auto lcm_of = [&](std::size_t a, std::size_t b) { return store[a].back().m.lcm(store[b].back().m); };
  auto same_comp = [&](std::size_t a, std::size_t b) { return store[a].back().comp == store[b].back().comp; };
  auto disjoint = [&](std::size_t a, std::size_t b) {
    return product_criterion && store[a].back().m.coprime(store[b].back().m);
  };

  auto update = [&](std::size_t h) {
    const auto& lth = store[h].back();
    std::vector<CriticalPair> c;
    for (auto gi : g) {
      if (same_comp(gi, h)) c.push_back({gi, h, lcm_of(gi, h), lth.comp});
    }
    std::vector<CriticalPair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto& p = c[k];
      bool keep = disjoint(p.i, h);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l) {
          if (c[l].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t l = 0; l < d.size() && keep; ++l) {
          if (d[l].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<CriticalPair> e;
    for (const auto& p : d) {
      if (!disjoint(p.i, h)) e.push_back(p);
    }
    std::vector<CriticalPair> kept;
    for (const auto& p : pairs) {
      bool drop = false;
      if (p.comp == lth.comp && lth.m.divides(p.lcm)) {
        const Monomial l1 = store[p.i].back().m.lcm(lth.m);
        const Monomial l2 = store[p.j].back().m.lcm(lth.m);
        drop = !(l1 == p.lcm) && !(l2 == p.lcm);
      }
      if (!drop) kept.push_back(p);
    }
    for (auto& p : e) kept.push_back(std::move(p));
    pairs = std::move(kept);
    std::vector<std::size_t> ng;
    for (auto gi : g) {
      const auto& ltg = store[gi].back();
      if (!(ltg.comp == lth.comp && lth.m.divides(ltg.m))) ng.push_back(gi);
    }
    ng.push_back(h);
    g = std::move(ng);
  };

  auto active = [&]() {
    std::vector<const MPoly<C>*> out;
    out.reserve(g.size());
    for (auto gi : g) out.push_back(&store[gi]);
    return out;
  };

  for (auto& f : input) {
    f = top_reduce(std::move(f), active(), cmp);
    if (f.empty()) continue;
    make_monic(f);
    store.push_back(std::move(f));
    update(store.size() - 1);
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      if (cmp(pairs[k].lcm, pairs[k].comp, pairs[best].lcm, pairs[best].comp) < 0) best = k;
    }
    const CriticalPair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    const auto& fi = store[p.i];
    const auto& fj = store[p.j];
    MPoly<C> s = fi;
    for (auto& t : s) t.m *= p.lcm / fi.back().m;
    s = sub_mul(s, C(1), p.lcm / fj.back().m, fj, cmp);
    s = top_reduce(std::move(s), active(), cmp);
    if (s.empty()) continue;
    make_monic(s);
    store.push_back(std::move(s));
    update(store.size() - 1);
  }

  // Minimalize, then tail-reduce.
  std::vector<MPoly<C>> basis;
  for (auto gi : g) basis.push_back(store[gi]);
  std::sort(basis.begin(), basis.end(), [&](const MPoly<C>& a, const MPoly<C>& b) {
    return cmp(a.back().m, a.back().comp, b.back().m, b.back().comp) < 0;
  });
  std::vector<MPoly<C>> minimal;
  for (auto& b : basis) {
    bool redundant = false;
    for (const auto& m : minimal) {
      if (m.back().comp == b.back().comp && m.back().m.divides(b.back().m)) redundant = true;
    }
    if (!redundant) minimal.push_back(std::move(b));
  }
  std::vector<MPoly<C>> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const MPoly<C>*> others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(&minimal[l]);
    }
    MPoly<C> tail(minimal[k].begin(), minimal[k].end() - 1);
    MPoly<C> r = full_reduce(std::move(tail), others, cmp);
    r.push_back(minimal[k].back());
    reduced.push_back(std::move(r));
  }
  return reduced;
}

}  // namespace detail

/// Reduced Groebner basis of a submodule of P^rank.
template <class C>
class ModuleBasis {
 public:
  ModuleBasis(const std::vector<PolyVector<C>>& gens, std::size_t rank, ModuleOrder order)
      : order_(std::move(order)), rank_(rank) {
    const detail::MCompare cmp(order_);
    std::vector<detail::MPoly<C>> input;
    for (const auto& v : gens) {
      if (v.size() != rank) throw std::invalid_argument("module generator has wrong length");
      input.push_back(detail::to_mpoly(v, cmp));
    }
    elements_ = detail::buchberger(std::move(input), rank, cmp);
  }

  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] const ModuleOrder& order() const { return order_; }

  [[nodiscard]] PolyVector<C> element(std::size_t k) const { return detail::from_mpoly(elements_.at(k), rank_); }
  [[nodiscard]] std::vector<PolyVector<C>> elements() const {
    std::vector<PolyVector<C>> out;
    for (std::size_t k = 0; k < elements_.size(); ++k) out.push_back(element(k));
    return out;
  }
  [[nodiscard]] std::uint32_t leading_component(std::size_t k) const { return elements_.at(k).back().comp; }
  [[nodiscard]] const Monomial& leading_monomial(std::size_t k) const { return elements_.at(k).back().m; }

  /// Fully reduced normal form.
  [[nodiscard]] PolyVector<C> reduce(const PolyVector<C>& v) const {
    const detail::MCompare cmp(order_);
    std::vector<const detail::MPoly<C>*> basis;
    for (const auto& e : elements_) basis.push_back(&e);
    return detail::from_mpoly(detail::full_reduce(detail::to_mpoly(v, cmp), basis, cmp), rank_);
  }

  [[nodiscard]] bool contains(const PolyVector<C>& v) const {
    for (const auto& p : reduce(v)) {
      if (!p.is_zero()) return false;
    }
    return true;
  }

 private:
  ModuleOrder order_;
  std::size_t rank_;
  std::vector<detail::MPoly<C>> elements_;
};

/// Reduced, monic Groebner basis of an ideal, ascending by leading term.
template <class C>
std::vector<BasicPolynomial<C>> groebner_basis(const std::vector<BasicPolynomial<C>>& gens, const TermOrder& order) {
  std::vector<PolyVector<C>> vs;
  for (const auto& g : gens) {
    if (!g.is_zero()) vs.push_back({g});
  }
  ModuleBasis<C> mb(vs, 1, ModuleOrder{order, PositionRule::PositionOverTerm});
  std::vector<BasicPolynomial<C>> out;
  for (std::size_t k = 0; k < mb.size(); ++k) out.push_back(mb.element(k)[0]);
  return out;
}

/// Normal form of f with respect to a Groebner basis for `order`.
template <class C>
BasicPolynomial<C> normal_form(const BasicPolynomial<C>& f, const std::vector<BasicPolynomial<C>>& basis,
                               const TermOrder& order) {
  const ModuleOrder mo{order, PositionRule::PositionOverTerm};
  const detail::MCompare cmp(mo);
  std::vector<detail::MPoly<C>> bs;
  for (const auto& b : basis) bs.push_back(detail::to_mpoly(PolyVector<C>{b}, cmp));
  std::vector<const detail::MPoly<C>*> ptrs;
  for (const auto& b : bs) ptrs.push_back(&b);
  return detail::from_mpoly(detail::full_reduce(detail::to_mpoly(PolyVector<C>{f}, cmp), ptrs, cmp), 1)[0];
}

/// Leading monomial of f for `order` (f nonzero).
template <class C>
Monomial leading_monomial(const BasicPolynomial<C>& f, const TermOrder& order) {
  const Monomial* best = &f.terms().at(0).first;
  for (const auto& t : f.terms()) {
    if (order.compare(t.first, *best) > 0) best = &t.first;
  }
  return *best;
}

/// Explicit membership and syzygies for a tuple of module elements
/// g_1..g_r in P^s. One Groebner basis of the graph module
/// {(sum c_j g_j, c)} in P^(s+r), position over term with the g-part in
/// front, answers both questions.
template <class C>
class ModuleLifter {
 public:
  ModuleLifter(std::vector<PolyVector<C>> gens, std::size_t rank, const TermOrder& order)
      : gens_(std::move(gens)), rank_(rank), basis_(extended(gens_, rank), rank + gens_.size(),
                                                    ModuleOrder{order, PositionRule::PositionOverTerm}) {}

  [[nodiscard]] const std::vector<PolyVector<C>>& generators() const { return gens_; }

  /// Coefficients c with v = sum c_j g_j, or nullopt if v is not in the
  /// module. The answer is the canonical one from the reduced basis; it is
  /// re-expanded and checked before being returned.
  [[nodiscard]] std::optional<std::vector<BasicPolynomial<C>>> lift(const PolyVector<C>& v) const {
    if (v.size() != rank_) throw std::invalid_argument("lift: vector has wrong length");
    PolyVector<C> ext(rank_ + gens_.size());
    for (std::size_t k = 0; k < rank_; ++k) ext[k] = v[k];
    const PolyVector<C> rem = basis_.reduce(ext);
    for (std::size_t k = 0; k < rank_; ++k) {
      if (!rem[k].is_zero()) return std::nullopt;
    }
    std::vector<BasicPolynomial<C>> coeffs;
    for (std::size_t j = 0; j < gens_.size(); ++j) coeffs.push_back(-rem[rank_ + j]);
    if (!(combine(coeffs) == v)) throw std::logic_error("lift does not re-expand to its input");
    return coeffs;
  }

  /// Reduced Groebner basis of the syzygy module, each vector verified.
  [[nodiscard]] std::vector<PolyVector<C>> syzygies() const {
    std::vector<PolyVector<C>> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (basis_.leading_component(k) < rank_) continue;
      const PolyVector<C> e = basis_.element(k);
      std::vector<BasicPolynomial<C>> s(e.begin() + static_cast<std::ptrdiff_t>(rank_), e.end());
      for (const auto& x : combine(s)) {
        if (!x.is_zero()) throw std::logic_error("syzygy does not vanish");
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  /// Groebner basis of the module generated by the g_j (their reduced
  /// basis), each with its expression in terms of the g_j.
  [[nodiscard]] std::vector<std::pair<PolyVector<C>, std::vector<BasicPolynomial<C>>>> basis_with_lift() const {
    std::vector<std::pair<PolyVector<C>, std::vector<BasicPolynomial<C>>>> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (basis_.leading_component(k) >= rank_) continue;
      const PolyVector<C> e = basis_.element(k);
      PolyVector<C> head(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(rank_));
      std::vector<BasicPolynomial<C>> tail(e.begin() + static_cast<std::ptrdiff_t>(rank_), e.end());
      out.emplace_back(std::move(head), std::move(tail));
    }
    return out;
  }

  [[nodiscard]] PolyVector<C> combine(const std::vector<BasicPolynomial<C>>& coeffs) const {
    PolyVector<C> out(rank_);
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      if (coeffs[j].is_zero()) continue;
      for (std::size_t k = 0; k < rank_; ++k) out[k] += coeffs[j] * gens_[j][k];
    }
    return out;
  }

 private:
  static std::vector<PolyVector<C>> extended(const std::vector<PolyVector<C>>& gens, std::size_t rank) {
    std::vector<PolyVector<C>> out;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (gens[j].size() != rank) throw std::invalid_argument("module generator has wrong length");
      PolyVector<C> e(rank + gens.size());
      for (std::size_t k = 0; k < rank; ++k) e[k] = gens[j][k];
      e[rank + j] = BasicPolynomial<C>(1L);
      out.push_back(std::move(e));
    }
    return out;
  }

  std::vector<PolyVector<C>> gens_;
  std::size_t rank_;
  ModuleBasis<C> basis_;
};

/// v = sum c_j gens_j with c canonical, or nullopt.
template <class C>
std::optional<std::vector<BasicPolynomial<C>>> lift_membership(const PolyVector<C>& v,
                                                               const std::vector<PolyVector<C>>& gens,
                                                               const TermOrder& order) {
  return ModuleLifter<C>(gens, v.size(), order).lift(v);
}

/// Generators (a reduced Groebner basis) of Syz(gens).
template <class C>
std::vector<PolyVector<C>> syzygies(const std::vector<PolyVector<C>>& gens, std::size_t rank,
                                    const TermOrder& order) {
  return ModuleLifter<C>(gens, rank, order).syzygies();
}

}  // namespace reembed
