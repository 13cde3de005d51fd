#pragma once

// Scaled trace forms (a, b) -> Tr(a^s b c) on ideal lattices, with s the
// conjugation (Hermitian forms) or the identity (symmetric forms), and the
// diagonalization of unimodular definite forms over F[x].

#include <vector>

#include "specrep/ideallat.hpp"
#include "specrep/radical.hpp"

namespace specrep {

struct GramForm {
  Matrix<RatFunc> entries;
  bool hermitian = false;

  /// All entries are polynomials.
  bool integral() const;
  /// Polynomial entries; raises kInvalidArgument when not integral.
  PolyMatrix poly() const;
};

/// Tr(a) for a in L.
inline RatFunc trace_element(const CurveAlgebra& alg, const FieldElem& a) { return alg.trace(a); }

GramForm gram_matrix(const IdealLattice& lattice, const FieldElem& c, bool hermitian);
/// Gram matrix on an arbitrary list of elements of L.
GramForm gram_in_basis(const CurveAlgebra& alg, const std::vector<FieldElem>& basis, const FieldElem& c,
                       bool hermitian);

/// det is a nonzero constant.
bool is_unimodular(const PolyMatrix& g);
bool is_unimodular(const GramForm& g);

/// The Hermite matrix: Gram matrix of the trace form in the power basis,
/// H(i, j) = p_{i+j}.
PolyMatrix hermite_matrix(const CurveAlgebra& alg);

struct Diagonalization {
  PolyMatrix t;               // columns: new basis in old coordinates
  std::vector<Rational> d;    // t^s' * g * t = diag(d)
};

/// For a unimodular form that is positive definite at every real x.
/// Degree reduction: with d_i = deg(g_ii)/2, the leading form
/// L_ij = [x^{d_i + d_j}] g_ij is singular while sum d_i > 0; a kernel vector
/// w gives e_k <- sum_j w_j x^{d_k - d_j} e_j (k of maximal d_k in supp w),
/// which lowers d_k. A constant LDL step finishes.
/// Raises kIndefiniteForm when g is not definite (detected through the
/// degree pattern or a nonpositive pivot), kInvalidArgument when g is not
/// unimodular, kNonTermination if the degree sum fails to decrease.
Diagonalization diagonalize_unimodular(const PolyMatrix& g, bool hermitian);

/// sqrt(d_k) for positive d_k; raises kInvalidArgument otherwise.
std::vector<RadScalar> constant_cholesky(const std::vector<Rational>& d);

/// (positive, negative, zero) eigenvalue counts of a symmetric rational
/// matrix, by congruence diagonalization with pivoting.
struct Signature {
  int positive = 0, negative = 0, zero = 0;
};
Signature signature(const Matrix<Rational>& a);

/// Entry-wise evaluation at a rational point.
Matrix<Rational> eval_real(const PolyMatrix& g, const Rational& a);
Matrix<Gauss> eval_at(const PolyMatrix& g, const Gauss& a);

/// All leading principal minors of a Hermitian constant matrix are positive.
bool is_positive_definite(const Matrix<Gauss>& a);

}  // namespace specrep
