#pragma once

// Rational functions num/den in F(x), F = Q(i), kept canonical: den monic and
// coprime to num, zero stored as 0/1. Used for traces and coordinates that
// need not be polynomial.

#include "specrep/poly.hpp"

namespace specrep {

class RatFunc {
 public:
  RatFunc() : den_(Gauss(1)) {}
  RatFunc(long c) : num_(Gauss(c)), den_(Gauss(1)) {}  // NOLINT(runtime/explicit)
  RatFunc(QiPoly num) : num_(std::move(num)), den_(Gauss(1)) {}  // NOLINT(runtime/explicit)
  RatFunc(QiPoly num, QiPoly den);

  const QiPoly& num() const { return num_; }
  const QiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_real() const { return num_.is_real() && den_.is_real(); }

  RatFunc conj() const { return RatFunc(num_.conj(), den_.conj()); }
  RatFunc inverse() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  void normalize();
  QiPoly num_;
  QiPoly den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }
inline RatFunc conj(const RatFunc& r) { return r.conj(); }

}  // namespace specrep
