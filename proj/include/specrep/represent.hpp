#pragma once

// Spectral representations det(tI - M) = f with M Hermitian (always, on
// supported curves) or real symmetric (bounded search).
//
// All correctness checks run on the radical-free witness (M_I, T, D, N):
//   charpoly(M_I) = f,  M_I T = T N,  det T constant,  N^s' D = D N,  D > 0,
// and M = D^{1/2} N D^{-1/2} has entries N_kl * sqrt(d_k d_l) / d_l.

#include <optional>
#include <string>
#include <vector>

#include "specrep/traceform.hpp"

namespace specrep {

enum class RepKind { kHermitian, kSymmetric };

const char* to_string(RepKind k);

struct SpectralRep {
  RepKind kind = RepKind::kHermitian;
  BiPoly f;
  PolyMatrix m_i;              // multiplication by t on the lattice basis
  PolyMatrix t;
  std::vector<Rational> d;
  PolyMatrix n;                // T^{-1} M_I T
  Matrix<RadPoly> m;
  // Provenance of a single-lattice construction (absent after composition).
  std::optional<IdealLattice> lattice;
  std::optional<FieldElem> scale;
};

/// Matrix of multiplication by t in the HNF basis of the lattice.
PolyMatrix mult_matrix(const IdealLattice& lattice);
/// Matrix of multiplication by u in an arbitrary basis of L, over F(x).
Matrix<RatFunc> mult_matrix_in_basis(const CurveAlgebra& alg, const std::vector<FieldElem>& basis,
                                     const FieldElem& u);

/// M = D^{1/2} N D^{-1/2}, one radical per entry.
Matrix<RadPoly> materialize(const PolyMatrix& n, const std::vector<Rational>& d);

/// Builds N and M from (M_I, T, D) and checks every invariant.
SpectralRep assemble(RepKind kind, const BiPoly& f, const PolyMatrix& m_i, const PolyMatrix& t,
                     const std::vector<Rational>& d);

/// Raises kNotRealRooted, curve-analysis errors, or kInternalCheckFailed.
SpectralRep hermitian_representation(const BiPoly& f);

struct SymmetricSearch {
  int degree_bound = -1;                 // -1: 2n + deg_x(disc)
  size_t max_candidates_per_ideal = 4000;
  bool two_squares_fallback = true;      // n = 2 only, after the lattice search
};

struct SearchStats {
  size_t ideals_tried = 0;
  size_t candidates_examined = 0;
  size_t generators_found = 0;
  bool used_two_squares = false;
};

int default_search_bound(const BiPoly& f);

/// nullopt is NotFound within the bound (not a disproof).
std::optional<SpectralRep> symmetric_representation_search(const BiPoly& f, const SymmetricSearch& opts,
                                                           SearchStats* stats = nullptr);

/// n = 2: M = [[-p/2 + u, v], [v, -p/2 - u]] with u^2 + v^2 = p^2/4 - r for
/// f = t^2 + p t + r, from a Gaussian factorization p^2/4 - r = lc |h|^2 and
/// lc = s^2 + w^2 over Q. nullopt when either step is unavailable.
std::optional<SpectralRep> two_squares_representation(const BiPoly& f);

/// q = s^2 + w^2 with rational s, w (brute force; numerators up to 10^12).
bool rational_two_squares(const Rational& q, Rational& s, Rational& w);

/// Exact, radical-free check of the witness, plus consistency of M.
bool verify_representation(const BiPoly& f, const SpectralRep& rep, std::string* why = nullptr);

/// Block-diagonal composition; raises kInvalidArgument on mixed kinds.
SpectralRep block_compose(const std::vector<SpectralRep>& reps);

/// v(M) = -(max entry degree); raises kInvalidArgument on the zero matrix.
int degree_valuation(const PolyMatrix& m);
/// v(M) = min_i v(a_i) / (n - i) with f = sum a_i t^i and v = -deg.
bool check_degree_bound(const PolyMatrix& m, const BiPoly& f);

}  // namespace specrep
