#pragma once

// Sparse polynomials in x, y, z, t over Q(i), with the text grammar used on
// the command line:
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*      division by constants only
//   unary := ('+' | '-') unary | power
//   power := atom ('^' digits)?
//   atom  := number | number 'i' | 'i' | 'x' | 'y' | 'z' | 't' | '(' expr ')'
//   number := digits | digits '/' digits     (no spaces inside)
//
// The printer emits monomials sorted t-major (then z, y, x), highest first,
// and its output parses back to the same polynomial.

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "specrep/bipoly.hpp"

namespace specrep {

enum Var : int { kX = 0, kY = 1, kZ = 2, kT = 3 };

class MPoly {
 public:
  using Exponents = std::array<int, 4>;  // indexed by Var

  MPoly() = default;
  explicit MPoly(long c) : MPoly(Gauss(c)) {}
  explicit MPoly(const Gauss& c);
  static MPoly var(Var v);
  static MPoly term(const Gauss& c, const Exponents& e);
  static MPoly from_bipoly(const BiPoly& f);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Gauss>& terms() const { return terms_; }
  int total_degree() const;
  int degree_in(Var v) const;
  bool uses(Var v) const { return degree_in(v) > 0; }
  bool is_homogeneous() const;
  bool is_real() const;
  bool is_constant() const;
  Gauss coeff(const Exponents& e) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Gauss& s, const MPoly& a);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned e) const;
  MPoly conj() const;
  Gauss eval(const std::array<Gauss, 4>& point) const;
  /// Replace each variable v by images[v]; variables map to arbitrary MPolys.
  MPoly substitute(const std::array<MPoly, 4>& images) const;

  /// Requires only x and t to occur.
  BiPoly to_bipoly() const;

 private:
  void insert(const Exponents& e, const Gauss& c);
  std::map<Exponents, Gauss> terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }
inline MPoly conj(const MPoly& p) { return p.conj(); }

/// Parses the text grammar above. Raises kParse with a position on error.
MPoly parse_poly(std::string_view text);
std::string to_string(const MPoly& p);
std::string to_string(const BiPoly& f);
std::string to_string(const QiPoly& p, char var = 'x');
std::string to_string(const QPoly& p, char var = 'x');

/// Parses a univariate polynomial in the given variable.
QiPoly parse_upoly(std::string_view text, char var = 'x');
/// Parses a polynomial in x and t into a BiPoly.
BiPoly parse_bipoly(std::string_view text);

}  // namespace specrep
