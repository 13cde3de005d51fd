#pragma once

// Polynomials in t with coefficients in F[x], F = Q(i) (rational input is
// the special case of real coefficients). The main object of the library is
// a BiPoly that is monic in t.

#include <vector>

#include "specrep/matrix.hpp"
#include "specrep/poly.hpp"

namespace specrep {

class BiPoly {
 public:
  BiPoly() = default;
  /// tcoeffs[k] is the coefficient of t^k.
  explicit BiPoly(std::vector<QiPoly> tcoeffs);

  static BiPoly from_rational(const std::vector<QPoly>& tcoeffs);
  /// Constant-in-t polynomial.
  static BiPoly constant(const QiPoly& c) { return BiPoly({c}); }
  /// t - p(x)
  static BiPoly linear(const QiPoly& p);

  int t_degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const QiPoly& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  QiPoly coeff(int k) const { return k >= 0 && k <= t_degree() ? c_[static_cast<size_t>(k)] : QiPoly(); }
  const std::vector<QiPoly>& tcoeffs() const { return c_; }

  bool is_monic() const;
  bool is_real() const;
  int x_degree() const;
  /// Total degree in (x, t), -1 for zero.
  int total_degree() const;

  BiPoly dt() const;
  BiPoly dx() const;
  BiPoly conj() const;

  /// f(a, t) as a polynomial in t.
  QiPoly at_x(const Gauss& a) const;
  Gauss eval(const Gauss& a, const Gauss& t) const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<QiPoly> c_;
};

/// Rational-coefficient copies of the t-coefficients; raises if f is not real.
std::vector<QPoly> rational_tcoeffs(const BiPoly& f);

/// Resultant with respect to t: the determinant of the Sylvester matrix with
/// the deg_t(g) rows of f first, then the deg_t(f) rows of g.
QiPoly resultant_t(const BiPoly& f, const BiPoly& g);

/// Res_t(f, df/dt), the discriminant up to sign and a power of lc_t(f).
QiPoly discriminant_t(const BiPoly& f);

/// det(tI - M) for a square polynomial matrix.
BiPoly charpoly(const Matrix<QiPoly>& m);
BiPoly charpoly(const Matrix<QPoly>& m);

}  // namespace specrep
