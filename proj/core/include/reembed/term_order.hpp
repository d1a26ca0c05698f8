#pragma once

#include "reembed/graded_ring.hpp"
#include "reembed/monomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace reembed {

/// Term ordering given by an integer matrix of full rank: monomials are
/// compared by the rows applied to their exponent vectors, lexicographically.
class TermOrder {
 public:
  using Matrix = std::vector<std::vector<std::int64_t>>;

  /// Validates rank n and that every indeterminate is greater than 1.
  explicit TermOrder(Matrix rows);

  static TermOrder degrevlex(std::size_t n);
  static TermOrder lex(std::size_t n);
  /// Block order: any monomial involving `eliminate` beats every monomial
  /// without; ties broken by degrevlex.
  static TermOrder elimination(std::size_t n, const std::vector<std::size_t>& eliminate);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] const Matrix& matrix() const { return rows_; }
  [[nodiscard]] bool is_degrevlex() const { return degrevlex_; }

  /// -1, 0 or 1.
  [[nodiscard]] int compare(const Monomial& a, const Monomial& b) const;
  [[nodiscard]] bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const TermOrder& a, const TermOrder& b) { return a.rows_ == b.rows_; }

 private:
  TermOrder() = default;
  Matrix rows_;
  std::size_t n_ = 0;
  bool degrevlex_ = false;
};

/// Full-rank matrix with the first row(s) built from the W-degrees of Z and
/// the remaining rows taken from the reversed identity, so that every
/// W-homogeneous f whose Z-linear part is z_i has leading term z_i.
/// Z must be non-empty, of positive weights, distinct, and sorted by
/// non-decreasing weight.
TermOrder build_separating_order(const GradedRing& ring, const std::vector<std::size_t>& z);

/// Appends rows e_{n-1}, ..., e_0 to `rows`, skipping dependent ones, until
/// the matrix has rank n.
TermOrder::Matrix complete_to_full_rank(TermOrder::Matrix rows, std::size_t n);

}  // namespace reembed
