#pragma once

// Single-radical values c * sqrt(r) with c in Q(i) and r a squarefree
// positive integer (r = 1 for no radical).

#include <string>

#include "specrep/poly.hpp"

namespace specrep {

/// Splits a positive integer as s^2 * r with r squarefree. Exact whenever
/// n < 10^18 (trial division to the cube root, then a square test); above
/// that, primes past 10^6 whose square divides n may stay in r.
void square_split(const Integer& n, Integer& s, Integer& r);

class RadScalar {
 public:
  RadScalar() : radicand_(1) {}
  RadScalar(Gauss coeff, Integer radicand = 1);  // NOLINT(runtime/explicit)

  /// sqrt(q) for a nonnegative rational q.
  static RadScalar sqrt(const Rational& q);

  const Gauss& coeff() const { return coeff_; }
  const Integer& radicand() const { return radicand_; }
  bool is_zero() const { return coeff_.is_zero(); }
  RadScalar conj() const { return RadScalar(coeff_.conj(), radicand_); }
  /// Approximation (re, im).
  std::pair<double, double> to_double() const;

  /// Sum of values with equal radicand (or one side zero).
  friend RadScalar operator+(const RadScalar& a, const RadScalar& b);
  friend RadScalar operator-(const RadScalar& a) { return RadScalar(-a.coeff_, a.radicand_); }
  friend RadScalar operator-(const RadScalar& a, const RadScalar& b) { return a + (-b); }
  friend RadScalar operator*(const RadScalar& a, const RadScalar& b);
  friend bool operator==(const RadScalar& a, const RadScalar& b) {
    return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
  }
  friend bool operator!=(const RadScalar& a, const RadScalar& b) { return !(a == b); }

 private:
  Gauss coeff_;
  Integer radicand_;
};

inline bool is_zero(const RadScalar& v) { return v.is_zero(); }
inline RadScalar conj(const RadScalar& v) { return v.conj(); }

/// p(x) * sqrt(r), r squarefree.
struct RadPoly {
  QiPoly poly;
  Integer radicand{1};

  bool is_zero() const { return poly.is_zero(); }
  RadPoly conj() const { return RadPoly{poly.conj(), radicand}; }
  /// Coefficient of x^d as a RadScalar.
  RadScalar coeff(int d) const { return RadScalar(poly.coeff(d), radicand); }
  friend bool operator==(const RadPoly& a, const RadPoly& b) {
    return a.poly == b.poly && (a.poly.is_zero() || a.radicand == b.radicand);
  }
};

inline bool is_zero(const RadPoly& v) { return v.is_zero(); }
inline RadPoly conj(const RadPoly& v) { return v.conj(); }

std::string to_string(const RadScalar& v);

}  // namespace specrep
