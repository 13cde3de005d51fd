#pragma once

// Exact scalars: arbitrary precision rationals and Gaussian rationals Q(i).

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace specrep {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational conj(const Rational& q) { return q; }
inline bool is_real(const Rational&) { return true; }

/// Element re + im*i of Q(i). Conjugation is the involution used for
/// Hermitian forms throughout the library.
class Gauss {
 public:
  Gauss() = default;
  Gauss(long v) : re_(v) {}  // NOLINT(runtime/explicit)
  Gauss(Rational re) : re_(std::move(re)) {}  // NOLINT(runtime/explicit)
  Gauss(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gauss i() { return Gauss(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  Gauss conj() const { return Gauss(re_, -im_); }
  /// re^2 + im^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Gauss inverse() const;

  Gauss& operator+=(const Gauss& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Gauss& operator-=(const Gauss& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Gauss& operator*=(const Gauss& o);
  Gauss& operator/=(const Gauss& o) { return *this *= o.inverse(); }

  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
  friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
  friend Gauss operator-(const Gauss& a) { return Gauss(-a.re_, -a.im_); }
  friend bool operator==(const Gauss& a, const Gauss& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

 private:
  Rational re_;
  Rational im_;
};

inline bool is_zero(const Gauss& z) { return z.is_zero(); }
inline Gauss conj(const Gauss& z) { return z.conj(); }
inline bool is_real(const Gauss& z) { return z.is_real(); }

/// Lexicographic order on (re, im); used only for deterministic sorting.
bool lex_less(const Gauss& a, const Gauss& b);

/// Scalar text form "a", "bi", "a+bi", "a-bi" with rational a, b
/// (e.g. "1/2+5/2i", "-i"). This is the JSON interchange format.
std::string to_string(const Gauss& z);
Gauss parse_gauss(std::string_view text);

}  // namespace specrep
