#pragma once

#include "reembed/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace reembed {

/// Rectangular matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  explicit PolyMatrix(const std::vector<std::vector<Polynomial>>& rows);

  static PolyMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }

  [[nodiscard]] std::vector<Polynomial> row(std::size_t i) const;
  [[nodiscard]] std::vector<Polynomial> column(std::size_t j) const;
  [[nodiscard]] PolyMatrix transpose() const;
  [[nodiscard]] PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] PolyMatrix substitute(const std::vector<Polynomial>& images) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> a_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Polynomial determinant(const PolyMatrix& m);

/// Adjugate; m * adjugate(m) = det(m) * I.
PolyMatrix adjugate(const PolyMatrix& m);

/// All k x k minors for k = rows(), columns chosen in lexicographic order.
std::vector<Polynomial> maximal_minors(const PolyMatrix& m);

/// All k x k minors of m, rows and columns in lexicographic order.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k);

/// Subsets of {0..n-1} of size k in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace reembed
