#include "reembed/reembedding.hpp"

#include "reembed/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace reembed {

namespace {

struct DegreeCandidates {
  std::vector<std::size_t> s;
  std::size_t m = 0;
};

DegreeCandidates candidates(const IdealPresentation& ideal, std::int64_t d) {
  DegreeCandidates c;
  for (auto i : separating_indeterminates(ideal)) {
    if (ideal.ring().weight(i) == d) c.s.push_back(i);
  }
  if (c.s.empty()) {
    throw MathError(ErrorCode::NoSeparatingInDegree, "No separating indeterminates in degree " + std::to_string(d));
  }
  c.m = std::min(c.s.size(), lin_part_space(ideal).dimension);
  return c;
}

std::vector<std::size_t> pick(const std::vector<std::size_t>& s, const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> out;
  for (auto k : idx) out.push_back(s[k]);
  return out;
}

}  // namespace

SeparatingTuple best_tuple_in_degree(const IdealPresentation& ideal, std::int64_t d) {
  const auto c = candidates(ideal, d);
  for (std::size_t k = c.m; k > 0; --k) {
    for (const auto& idx : combinations(c.s.size(), k)) {
      const auto z = pick(c.s, idx);
      if (!top_rank_check(ideal, z)) continue;
      if (auto t = try_find_separating_tuple(ideal, z)) return *t;
    }
  }
  throw MathError(ErrorCode::VerificationFailed, "a separating indeterminate of degree " + std::to_string(d) +
                                                     " admits no separating tuple");
}

std::vector<SeparatingTuple> all_best_tuples_in_degree(const IdealPresentation& ideal, std::int64_t d) {
  const auto c = candidates(ideal, d);
  for (std::size_t k = c.m; k > 0; --k) {
    std::vector<SeparatingTuple> hits;
    for (const auto& idx : combinations(c.s.size(), k)) {
      const auto z = pick(c.s, idx);
      if (!top_rank_check(ideal, z)) continue;
      if (auto t = try_find_separating_tuple(ideal, z)) hits.push_back(std::move(*t));
    }
    if (!hits.empty()) return hits;
  }
  throw MathError(ErrorCode::VerificationFailed, "a separating indeterminate of degree " + std::to_string(d) +
                                                     " admits no separating tuple");
}

ReembeddingResult make_reembedding(const IdealPresentation& ideal, const SeparatingTuple& coherent) {
  const auto& ring = ideal.ring();
  auto elim = rewrite_eliminate(ideal, coherent.z, coherent.f);
  ReembeddingResult out;
  out.z = coherent.z;
  out.tuple = coherent;
  out.status = optimality_status(ideal, coherent.z);
  out.phi.source = ring;
  out.phi.target = elim.ideal.ring();
  std::vector<Polynomial> inverse(out.phi.target.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (elim.mapping[i] >= 0) {
      out.phi.images.push_back(Polynomial::variable(static_cast<std::size_t>(elim.mapping[i])));
      inverse[static_cast<std::size_t>(elim.mapping[i])] = Polynomial::variable(i);
    } else {
      out.phi.images.emplace_back();
    }
  }
  for (std::size_t k = 0; k < coherent.z.size(); ++k) {
    const Polynomial h = Polynomial::variable(coherent.z[k]) - coherent.f[k];
    out.phi.images[coherent.z[k]] = h.remap(elim.mapping);
  }
  out.phi.inverse = std::move(inverse);
  out.target = std::move(elim.ideal);
  return out;
}

ReembeddingResult best_separating_reembedding(const IdealPresentation& ideal) {
  ideal.require_positive_homogeneous();
  const auto& ring = ideal.ring();
  std::vector<std::int64_t> degrees;
  for (auto i : separating_indeterminates(ideal)) degrees.push_back(ring.weight(i));
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  SeparatingTuple plain;
  for (auto d : degrees) {
    const auto t = best_tuple_in_degree(ideal, d);
    plain.z.insert(plain.z.end(), t.z.begin(), t.z.end());
    plain.f.insert(plain.f.end(), t.f.begin(), t.f.end());
  }
  const SeparatingTuple coherent = plain.z.empty() ? plain : coherify(plain, ring);
  auto out = make_reembedding(ideal, coherent);
  if (plain.z.empty()) out.note = "no separating indeterminates; identity re-embedding";
  return out;
}

ReembeddingResult positively_graded_optimal(const IdealPresentation& ideal) {
  const auto& ring = ideal.ring();
  if (!ring.is_positive()) throw MathError(ErrorCode::Precondition, "the grading is not positive");
  ideal.require_positive_homogeneous();
  const auto space = lin_part_space(ideal);
  const std::size_t n = ring.size();

  // Generators whose linear parts form a basis of Lin(I).
  std::vector<std::size_t> chosen;
  DenseMatrix<Rational> rows;
  for (std::size_t j = 0; j < space.coefficients.size() && chosen.size() < space.dimension; ++j) {
    auto trial = rows;
    trial.push_back(space.coefficients[j]);
    if (rank(trial) == trial.size()) {
      rows = std::move(trial);
      chosen.push_back(j);
    }
  }
  const std::size_t s = chosen.size();
  if (s == 0) {
    auto out = make_reembedding(ideal, SeparatingTuple{});
    out.note = "Lin(I) = 0; identity re-embedding";
    return out;
  }

  // Reduced echelon form of [L | E]; the right block records the row operations.
  DenseMatrix<Rational> aug = rows;
  for (std::size_t i = 0; i < s; ++i) {
    aug[i].resize(n + s, Rational(0));
    aug[i][n + i] = Rational(1);
  }
  const auto pivots = rref(aug);
  if (pivots.size() != s) throw MathError(ErrorCode::VerificationFailed, "linear parts are not independent");

  SeparatingTuple plain;
  for (std::size_t i = 0; i < s; ++i) {
    Polynomial f;
    for (std::size_t k = 0; k < s; ++k) {
      if (!aug[i][n + k].is_zero()) f += ideal.generators()[chosen[k]].scaled(aug[i][n + k]);
    }
    if (!ring.w_degree(f).homogeneous()) {
      throw MathError(ErrorCode::VerificationFailed, "interreduction mixed degrees");
    }
    plain.z.push_back(pivots[i]);
    plain.f.push_back(std::move(f));
  }
  auto out = make_reembedding(ideal, coherify(plain, ring));
  if (out.status != Optimality::OptimalByLinpart) {
    throw MathError(ErrorCode::VerificationFailed, "#Z differs from dim Lin(I)");
  }
  return out;
}

std::optional<std::vector<std::int64_t>> detect_grading(const std::vector<Polynomial>& gens, std::size_t n) {
  // (m - m0) . W = 0 for every pair of terms of a generator.
  DenseMatrix<Rational> eqs;
  for (const auto& g : gens) {
    if (g.terms().empty()) continue;
    const Monomial& m0 = g.terms().front().first;
    for (const auto& [m, c] : g.terms()) {
      std::vector<Rational> row(n, Rational(0));
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        const long diff = static_cast<long>(m[i]) - static_cast<long>(m0[i]);
        row[i] = Rational(diff);
        nonzero = nonzero || diff != 0;
      }
      if (nonzero) eqs.push_back(std::move(row));
    }
  }
  for (std::size_t zeros = n; zeros-- > 0;) {
    for (const auto& zero_set : combinations(n, zeros)) {
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < n; ++i) {
        if (!std::binary_search(zero_set.begin(), zero_set.end(), i)) support.push_back(i);
      }
      DenseMatrix<Rational> sub;
      for (const auto& row : eqs) {
        std::vector<Rational> r;
        for (auto i : support) r.push_back(row[i]);
        sub.push_back(std::move(r));
      }
      const auto ker = kernel(sub, support.size());
      if (ker.size() != 1) continue;
      const auto& v = ker[0];
      const int sign = v[0].sign();
      if (!std::all_of(v.begin(), v.end(), [&](const Rational& x) { return x.sign() == sign; })) continue;
      mpz_class den = 1;
      for (const auto& x : v) den = lcm(den, x.denominator());
      mpz_class g = 0;
      std::vector<mpz_class> ints;
      for (const auto& x : v) {
        mpz_class t = x.numerator() * (den / x.denominator());
        if (sign < 0) t = -t;
        g = gcd(g, t);
        ints.push_back(t);
      }
      std::vector<std::int64_t> w(n, 0);
      for (std::size_t k = 0; k < support.size(); ++k) w[support[k]] = mpz_class(ints[k] / g).get_si();
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace reembed
