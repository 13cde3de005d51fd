#pragma once

// Fractional ideals of B = F[x][t]/(f) as full-rank F[x]-lattices in L.
//
// A lattice is (1/den) * colspan(basis) where basis is the canonical HNF of
// numerator columns in the power basis 1, t, ..., t^{n-1}, den is monic and
// coprime to the content of basis. Equal modules compare equal.

#include <functional>
#include <optional>
#include <vector>

#include "specrep/algebra.hpp"
#include "specrep/curvedata.hpp"

namespace specrep {

class IdealLattice {
 public:
  IdealLattice() = default;
  /// Lattice (1/den) * span(columns), reduced to canonical form.
  static IdealLattice from_columns(AlgebraPtr alg, const std::vector<Column>& columns, const QiPoly& den);

  const CurveAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const PolyMatrix& basis() const { return basis_; }
  const QiPoly& den() const { return den_; }
  size_t n() const { return basis_.rows(); }

  /// The k-th basis element column(k) / den.
  FieldElem element(size_t k) const;
  std::vector<FieldElem> elements() const;
  BiPoly numerator(size_t k) const { return BiPoly(basis_.column(k)); }

  /// Coordinates of u in the lattice basis, over F(x).
  std::vector<RatFunc> coordinates(const FieldElem& u) const;
  bool contains(const FieldElem& u) const;
  /// t * (every basis element) lies in the lattice.
  bool is_closed_under_t() const;
  bool is_real() const;

  friend bool operator==(const IdealLattice& a, const IdealLattice& b);
  friend bool operator!=(const IdealLattice& a, const IdealLattice& b) { return !(a == b); }

 private:
  AlgebraPtr alg_;
  PolyMatrix basis_;
  QiPoly den_;
};

IdealLattice unit_ideal(const AlgebraPtr& alg);
/// The B-module generated by gens. Raises kInvalidArgument for the zero module.
IdealLattice ideal_from_generators(const AlgebraPtr& alg, const std::vector<FieldElem>& gens);
IdealLattice ideal_mul(const IdealLattice& a, const IdealLattice& b);
/// u * I for an element u of L.
IdealLattice ideal_scale(const IdealLattice& a, const FieldElem& u);
/// Requires f with real coefficients.
IdealLattice ideal_conjugate(const IdealLattice& a);
/// (B : I), checked against I * I^{-1} = B (kNotInvertible otherwise).
IdealLattice ideal_inverse(const IdealLattice& a);
/// I^e for any integer e.
IdealLattice ideal_pow(const IdealLattice& a, int e);

/// The maximal ideal (x - a, t - t0). Raises kInvalidArgument when
/// f(a, t0) != 0.
IdealLattice prime_at_point(const AlgebraPtr& alg, const Gauss& a, const Gauss& t0);

/// J = prod over branch points P with Im(a) > 0 of q_P^{e-1}, so that
/// conj(J) * J = (f_t). Raises kRealRamification for a real branch point;
/// the identity is checked and a failure raises kInternalCheckFailed.
IdealLattice half_different(const AlgebraPtr& alg, const CurveData& cd);

struct GeneratorSearch {
  int degree_bound = 0;        // on the x-degree of each power-basis coefficient
  size_t max_candidates = 20000;
};

/// Visits generators g of I (I = (g)) among elements whose power-basis
/// coefficients have x-degree <= degree_bound, in a degree-graded sweep of
/// +-1 combinations of a kernel basis. Stops early when visit returns true.
/// Returns the number of candidates examined.
size_t for_each_generator(const IdealLattice& ideal, const GeneratorSearch& opts,
                          const std::function<bool(const FieldElem&)>& visit);

/// First generator found by for_each_generator, or nullopt (NotFound).
std::optional<FieldElem> principal_generator_search(const IdealLattice& ideal, int degree_bound);

}  // namespace specrep
