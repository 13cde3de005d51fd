#pragma once

// Definite determinantal pencils L = A x + B y + C z with det L = F for a
// ternary form F hyperbolic with respect to e.
//
// Per factor F_i: normalize (U e = (0, 0, 1), F' = F(U^{-1} Y) / F(e)),
// represent f = F'(x, 1, t) as det(tI - M), split M = M1 x + M0 and set
//   L'(Y) = Y3 I - Y2 M0 - Y1 M1,   L(X) = S L'(U X) S,
// with S = diag(sqrt F(e), 1, ..., 1), so det L = F(e) F'(U X) = F and
// L(e) = S^2 > 0. Factors are placed in diagonal blocks.

#include <array>
#include <vector>

#include "specrep/represent.hpp"
#include "specrep/ternary.hpp"

namespace specrep {

struct PencilBlock {
  Normalization norm;
  SpectralRep rep;             // of dehomogenize(norm.normalized)
};

struct Pencil {
  RepKind kind = RepKind::kHermitian;
  MPoly form;                  // product of the block forms
  Direction e{};
  Matrix<RadScalar> a, b, c;   // coefficients of x, y, z
  std::vector<PencilBlock> blocks;

  size_t size() const { return a.rows(); }
};

/// Raises kNotHyperbolic (with the failing minor), curve-analysis errors of
/// the dehomogenized f, or kNotFound for an exhausted symmetric search.
Pencil hv_representation(const MPoly& form, const Direction& e, RepKind kind,
                         const SymmetricSearch& opts = {});

/// F given as a list of factors, each hyperbolic w.r.t. e; blocks are built
/// concurrently and placed on the diagonal.
Pencil hv_representation(const std::vector<MPoly>& factors, const Direction& e, RepKind kind,
                         const SymmetricSearch& opts = {});

/// Coefficient matrices (x, y, z) of one block, recomputed from its witness.
std::array<Matrix<RadScalar>, 3> block_pencil(const PencilBlock& block);

/// det(Y3 I - Y2 N0 - Y1 N1) over Q(i)[Y1, Y2, Y3] (as x, y, z), for N of
/// entry degree <= 1.
MPoly witness_determinant(const PolyMatrix& n);

/// Exact check: every block witness is valid and consistent with the stored
/// matrices, the Berkowitz determinant of each witness pencil pulled back
/// through U equals F_i, the product of the F_i is F, A, B, C are
/// self-adjoint, and L(e) is positive definite (leading minors of D P).
bool verify_pencil(const Pencil& p, std::string* why = nullptr);

/// L evaluated at a rational point, as floating point (re, im) pairs.
Matrix<std::pair<double, double>> pencil_at(const Pencil& p, const Direction& point);

}  // namespace specrep
