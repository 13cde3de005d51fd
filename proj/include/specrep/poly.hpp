#pragma once

// Dense univariate polynomials over an exact field K (Rational or Gauss).
// Coefficients are stored low degree first and kept trimmed, so the zero
// polynomial has no coefficients and degree -1.
//
// Degrees are expected to stay small (deg <= ~64); arithmetic is schoolbook.

#include <span>
#include <utility>
#include <vector>

#include "specrep/errors.hpp"
#include "specrep/scalar.hpp"

namespace specrep {

template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Poly(const K& constant) {
    if (!specrep::is_zero(constant)) c_.push_back(constant);
  }
  explicit Poly(long constant) : Poly(K(constant)) {}

  static Poly monomial(const K& coeff, int degree) {
    if (specrep::is_zero(coeff)) return Poly();
    std::vector<K> c(static_cast<size_t>(degree) + 1, K(0));
    c.back() = coeff;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(K(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::span<const K> coeffs() const { return c_; }

  /// Coefficient of x^d, zero outside the stored range.
  K coeff(int d) const {
    if (d < 0 || d > degree()) return K(0);
    return c_[static_cast<size_t>(d)];
  }
  const K& leading() const { return c_.back(); }
  K constant_term() const { return coeff(0); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const K& s) {
    if (specrep::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (specrep::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Quotient and remainder of Euclidean division; b must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorKind::kInvalidArgument, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<K> r = a.c_;
    std::vector<K> q(a.c_.size() - b.c_.size() + 1, K(0));
    K inv = K(1) / b.leading();
    const size_t db = b.c_.size() - 1;
    for (size_t k = r.size(); k-- > db;) {
      if (specrep::is_zero(r[k])) continue;
      K f = r[k] * inv;
      q[k - db] = f;
      for (size_t j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
    }
    r.resize(db);
    return {Poly(std::move(q)), Poly(std::move(r))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  /// a / b when b is known to divide a; raises otherwise.
  friend Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(ErrorKind::kInternalCheckFailed, "inexact polynomial division");
    return q;
  }

  bool divides(const Poly& a) const { return (a % *this).is_zero(); }

  template <class V>
  V eval(const V& v) const {
    V acc(0);
    for (size_t k = c_.size(); k-- > 0;) acc = acc * v + V(c_[k]);
    return acc;
  }
  K operator()(const K& v) const { return eval<K>(v); }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> d(c_.size() - 1, K(0));
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * K(static_cast<long>(k));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * (K(1) / leading());
  }

  Poly conj() const {
    std::vector<K> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(specrep::conj(v));
    return Poly(std::move(c));
  }

  bool is_real() const {
    for (const auto& v : c_)
      if (!specrep::is_real(v)) return false;
    return true;
  }

  /// p(x) -> p(x + s)
  Poly shift(const K& s) const {
    Poly r;
    const Poly lin(std::vector<K>{s, K(1)});
    for (size_t k = c_.size(); k-- > 0;) r = r * lin + Poly(c_[k]);
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && specrep::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

template <class K>
Poly<K> pow(const Poly<K>& p, unsigned e) {
  Poly<K> r(K(1)), b = p;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class K>
Poly<K> lcm(const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<K>();
  return exact_div(a * b, gcd(a, b)).monic();
}

using QPoly = Poly<Rational>;
using QiPoly = Poly<Gauss>;

inline bool is_zero(const QPoly& p) { return p.is_zero(); }
inline bool is_zero(const QiPoly& p) { return p.is_zero(); }
inline QiPoly conj(const QiPoly& p) { return p.conj(); }
inline QPoly conj(const QPoly& p) { return p; }

QiPoly to_gauss(const QPoly& p);
/// Raises kInvalidArgument if some coefficient has a nonzero imaginary part.
QPoly to_rational(const QiPoly& p);
/// Content-free integer coefficients of a rational polynomial (sign of lc kept).
std::vector<Integer> primitive_integer_coeffs(const QPoly& p);

}  // namespace specrep
