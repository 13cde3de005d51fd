#pragma once

// Exact linear algebra over a field K (Rational or Gauss).

#include <vector>

#include "specrep/matrix.hpp"

namespace specrep {

/// Reduced row echelon form in place; returns pivot columns.
template <class K>
std::vector<size_t> rref(Matrix<K>& a) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    size_t p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    K inv = K(1) / a(row, col);
    for (size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (size_t r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      K f = a(r, col);
      for (size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of {v : a v = 0}, one vector per free column, in column order.
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> a) {
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<K>> out;
  for (size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(a.cols(), K(0));
    v[free] = K(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

template <class K>
size_t rank(Matrix<K> a) {
  return rref(a).size();
}

}  // namespace specrep
