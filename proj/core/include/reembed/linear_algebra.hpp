#pragma once

#include <cstddef>
#include <vector>

namespace reembed {

template <class C>
using DenseMatrix = std::vector<std::vector<C>>;

/// In-place reduced row echelon form over a field. Returns the pivot columns
/// in increasing order; zero rows are moved to the bottom.
template <class C>
std::vector<std::size_t> rref(DenseMatrix<C>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    const C inv = a[r][c].inverse();
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const C f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class C>
std::size_t rank(DenseMatrix<C> a) {
  return rref(a).size();
}

/// Basis of {v : a v = 0}, one vector per free column.
template <class C>
DenseMatrix<C> kernel(DenseMatrix<C> a, std::size_t cols) {
  DenseMatrix<C> basis;
  if (a.empty()) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<C> v(cols, C(0));
      v[c] = C(1);
      basis.push_back(v);
    }
    return basis;
  }
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<C> v(cols, C(0));
    v[f] = C(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(v);
  }
  return basis;
}

}  // namespace reembed
