#pragma once

// The algebra L = F(x)[t]/(f) for f monic in t, F = Q(i). Elements are
// num(x, t) / den(x) with deg_t num < n and den monic, coprime to the
// content of num.

#include <memory>
#include <vector>

#include "specrep/bipoly.hpp"
#include "specrep/hnf.hpp"
#include "specrep/ratfunc.hpp"

namespace specrep {

struct FieldElem {
  BiPoly num;
  QiPoly den{Gauss(1)};

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.num == b.num && a.den == b.den;
  }
};

class CurveAlgebra {
 public:
  /// Raises kNotMonic unless f is monic in t of degree >= 1.
  explicit CurveAlgebra(BiPoly f);

  const BiPoly& f() const { return f_; }
  int n() const { return n_; }
  bool is_real() const { return real_; }
  /// Power sums p_0 .. p_{2n-2} of the t-roots (Newton's identities).
  const std::vector<QiPoly>& power_sums() const { return power_sums_; }

  /// Remainder of g modulo f in t.
  BiPoly reduce(const BiPoly& g) const;
  FieldElem make(const BiPoly& num, const QiPoly& den = QiPoly(Gauss(1))) const;
  FieldElem from_ratfunc(const RatFunc& r) const;
  FieldElem t() const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const { return FieldElem{BiPoly() - a.num, a.den}; }
  FieldElem conj(const FieldElem& a) const;
  /// Raises kNotInvertible for zero divisors.
  FieldElem inverse(const FieldElem& a) const;
  bool is_zero(const FieldElem& a) const { return a.num.is_zero(); }

  /// Trace of multiplication by a, an element of F(x).
  RatFunc trace(const FieldElem& a) const;
  /// Matrix of multiplication by g in the power basis 1, t, ..., t^{n-1}.
  PolyMatrix mult_matrix(const BiPoly& g) const;
  /// det of multiplication by g (the norm of g), an element of F[x].
  QiPoly norm(const BiPoly& g) const { return det(mult_matrix(g)); }

  /// Power-basis coordinates of a reduced numerator, padded to length n.
  Column coords(const BiPoly& g) const;
  BiPoly from_coords(const Column& c) const { return BiPoly(c); }

 private:
  BiPoly f_;
  int n_;
  bool real_;
  std::vector<QiPoly> power_sums_;
};

using AlgebraPtr = std::shared_ptr<const CurveAlgebra>;

inline AlgebraPtr make_algebra(const BiPoly& f) { return std::make_shared<CurveAlgebra>(f); }

}  // namespace specrep
