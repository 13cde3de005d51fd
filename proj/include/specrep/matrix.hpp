#pragma once

// Dense matrices over a commutative ring R, plus division-free
// characteristic polynomial, determinant and adjugate (Berkowitz).

#include <cstddef>
#include <utility>
#include <vector>

#include "specrep/errors.hpp"
#include "specrep/scalar.hpp"

namespace specrep {

template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, const R& fill = R())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(size_t n, const R& one = R(1)) {
    Matrix m(n, n);
    for (size_t k = 0; k < n; ++k) m(k, k) = one;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  R& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const R& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  std::vector<R> column(size_t c) const {
    std::vector<R> v;
    v.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }
  void set_column(size_t c, const std::vector<R>& v) {
    for (size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  template <class F>
  auto map(F&& fn) const {
    using S = decltype(fn(std::declval<const R&>()));
    Matrix<S> m(rows_, cols_);
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols_; ++c) m(r, c) = fn((*this)(r, c));
    return m;
  }

  /// Square submatrix on the given (sorted) index set.
  Matrix principal_submatrix(const std::vector<size_t>& idx) const {
    Matrix s(idx.size(), idx.size());
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(idx[i], idx[j]);
    return s;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::kInvalidArgument, "matrix shape mismatch in product");
    Matrix p(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }
  friend Matrix operator*(const R& s, Matrix a) {
    for (auto& v : a.data_) v = s * v;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero_matrix() const {
    for (const auto& v : data_)
      if (!is_zero(v)) return false;
    return true;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      fail(ErrorKind::kInvalidArgument, "matrix shape mismatch");
  }

  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<R> data_;
};

/// Conjugate transpose, using the ring's conj().
template <class R>
Matrix<R> adjoint(const Matrix<R>& m) {
  return m.transpose().map([](const R& v) { return conj(v); });
}

template <class R>
Matrix<R> block_diagonal(const std::vector<Matrix<R>>& blocks) {
  size_t n = 0, m = 0;
  for (const auto& b : blocks) {
    n += b.rows();
    m += b.cols();
  }
  Matrix<R> out(n, m);
  size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (size_t r = 0; r < b.rows(); ++r)
      for (size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

/// Coefficients c[0..n] (low degree first, c[n] = 1) of det(tI - A),
/// computed with Berkowitz's division-free algorithm, so it is valid over
/// any commutative ring.
template <class R>
std::vector<R> charpoly_coeffs(const Matrix<R>& a) {
  if (!a.is_square()) fail(ErrorKind::kInvalidArgument, "charpoly of non-square matrix");
  const size_t n = a.rows();
  if (n == 0) return {R(1)};
  // v holds coefficients high degree first.
  std::vector<R> v{R(1), -a(0, 0)};
  for (size_t r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
    std::vector<R> col;
    col.reserve(r + 2);
    col.push_back(R(1));
    col.push_back(-a(r, r));
    std::vector<R> w(r);  // A_sub^k C
    for (size_t i = 0; i < r; ++i) w[i] = a(i, r);
    for (size_t k = 0; k < r; ++k) {
      R s = R(0);
      for (size_t j = 0; j < r; ++j) s += a(r, j) * w[j];
      col.push_back(-s);
      if (k + 1 < r) {
        std::vector<R> nw(r, R(0));
        for (size_t i = 0; i < r; ++i)
          for (size_t j = 0; j < r; ++j) nw[i] += a(i, j) * w[j];
        w = std::move(nw);
      }
    }
    std::vector<R> nv(r + 2, R(0));
    for (size_t i = 0; i < r + 2; ++i)
      for (size_t j = 0; j <= i && j < v.size(); ++j) nv[i] += col[i - j] * v[j];
    v = std::move(nv);
  }
  return std::vector<R>(v.rbegin(), v.rend());
}

template <class R>
R det(const Matrix<R>& a) {
  if (!a.is_square()) fail(ErrorKind::kInvalidArgument, "determinant of non-square matrix");
  auto c = charpoly_coeffs(a);
  return (a.rows() % 2 == 0) ? c[0] : R(-c[0]);
}

/// Classical adjugate via Cayley-Hamilton: adj(A) = (-1)^{n+1} q(A) where
/// det(tI - A) = t q(t) + c0.
template <class R>
Matrix<R> adjugate(const Matrix<R>& a) {
  const size_t n = a.rows();
  auto c = charpoly_coeffs(a);
  if (n == 0) return a;
  // q(A) = A^{n-1} + c_{n-1} A^{n-2} + ... + c_1 I, Horner.
  Matrix<R> q = Matrix<R>::identity(n);
  for (size_t k = n - 1; k >= 1; --k) {
    q = a * q;
    for (size_t i = 0; i < n; ++i) q(i, i) += c[k];
    if (k == 1) break;
  }
  if (n % 2 == 0) q = -q;
  return q;
}

}  // namespace specrep
