#include "reembed/term_order.hpp"

#include "reembed/errors.hpp"
#include "reembed/linear_algebra.hpp"
#include "reembed/rational.hpp"

#include <set>

namespace reembed {

namespace {

DenseMatrix<Rational> to_rational(const TermOrder::Matrix& rows) {
  DenseMatrix<Rational> m;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    row.reserve(r.size());
    for (auto x : r) row.emplace_back(static_cast<long>(x));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

TermOrder::TermOrder(Matrix rows) : rows_(std::move(rows)) {
  n_ = rows_.empty() ? 0 : rows_[0].size();
  for (const auto& r : rows_) {
    if (r.size() != n_) throw MathError(ErrorCode::Precondition, "ragged term order matrix");
  }
  if (rows_.size() != n_ || rank(to_rational(rows_)) != n_) {
    throw MathError(ErrorCode::Precondition, "term order matrix must be square of full rank");
  }
  for (std::size_t c = 0; c < n_; ++c) {
    for (const auto& r : rows_) {
      if (r[c] == 0) continue;
      if (r[c] < 0) throw MathError(ErrorCode::Precondition, "term order matrix is not a well-ordering");
      break;
    }
  }
  degrevlex_ = rows_ == degrevlex(n_).rows_;
}

TermOrder TermOrder::degrevlex(std::size_t n) {
  TermOrder t;
  t.n_ = n;
  t.degrevlex_ = true;
  if (n == 0) return t;
  t.rows_.emplace_back(n, 1);
  for (std::size_t k = n - 1; k >= 1; --k) {
    std::vector<std::int64_t> row(n, 0);
    row[k] = -1;
    t.rows_.push_back(std::move(row));
  }
  return t;
}

TermOrder TermOrder::lex(std::size_t n) {
  Matrix rows;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::int64_t> row(n, 0);
    row[k] = 1;
    rows.push_back(std::move(row));
  }
  return TermOrder(std::move(rows));
}

TermOrder TermOrder::elimination(std::size_t n, const std::vector<std::size_t>& eliminate) {
  if (eliminate.empty()) return degrevlex(n);
  Matrix rows;
  std::vector<std::int64_t> first(n, 0);
  for (auto i : eliminate) first.at(i) = 1;
  rows.push_back(std::move(first));
  for (const auto& r : degrevlex(n).rows_) rows.push_back(r);
  // Drop the degrevlex row that became dependent.
  Matrix kept;
  for (const auto& r : rows) {
    Matrix trial = kept;
    trial.push_back(r);
    if (rank(to_rational(trial)) == trial.size()) kept = std::move(trial);
    if (kept.size() == n) break;
  }
  return TermOrder(std::move(kept));
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (degrevlex_) return degrevlex_compare(a, b);
  for (const auto& row : rows_) {
    std::int64_t va = 0;
    std::int64_t vb = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (row[i] == 0) continue;
      va += row[i] * static_cast<std::int64_t>(a[i]);
      vb += row[i] * static_cast<std::int64_t>(b[i]);
    }
    if (va != vb) return va < vb ? -1 : 1;
  }
  return 0;
}

std::string TermOrder::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < rows_[r].size(); ++c) out += (c ? "," : "") + std::to_string(rows_[r][c]);
    out += "]";
  }
  return out + "]";
}

TermOrder::Matrix complete_to_full_rank(TermOrder::Matrix rows, std::size_t n) {
  TermOrder::Matrix kept;
  for (auto& r : rows) {
    TermOrder::Matrix trial = kept;
    trial.push_back(r);
    if (rank(to_rational(trial)) == trial.size()) kept = std::move(trial);
  }
  for (std::size_t k = n; k-- > 0 && kept.size() < n;) {
    std::vector<std::int64_t> e(n, 0);
    e[k] = 1;
    TermOrder::Matrix trial = kept;
    trial.push_back(std::move(e));
    if (rank(to_rational(trial)) == trial.size()) kept = std::move(trial);
  }
  return kept;
}

TermOrder build_separating_order(const GradedRing& ring, const std::vector<std::size_t>& z) {
  if (z.empty()) throw MathError(ErrorCode::Precondition, "separating order needs a non-empty Z");
  const std::size_t n = ring.size();
  std::set<std::size_t> seen;
  std::int64_t last = 0;
  for (auto i : z) {
    if (i >= n) throw MathError(ErrorCode::Precondition, "Z index out of range");
    if (ring.weight(i) == 0) {
      throw MathError(ErrorCode::Precondition, "Z contains the degree-zero indeterminate " + ring.name(i));
    }
    if (!seen.insert(i).second) throw MathError(ErrorCode::Precondition, "Z has repeated entries");
    if (ring.weight(i) < last) throw MathError(ErrorCode::Precondition, "Z must be sorted by degree");
    last = ring.weight(i);
  }
  TermOrder::Matrix rows;
  if (z.size() == 1) {
    std::vector<std::int64_t> r(n, 0);
    r[z[0]] = 1;
    rows.push_back(std::move(r));
  } else {
    std::vector<std::int64_t> r1(n, 0);
    std::vector<std::int64_t> r2(n, 0);
    for (auto i : z) {
      r1[i] = ring.weight(i);
      r2[i] = ring.weight(i) - 1;
    }
    rows.push_back(std::move(r1));
    rows.push_back(std::move(r2));
  }
  return TermOrder(complete_to_full_rank(std::move(rows), n));
}

}  // namespace reembed
