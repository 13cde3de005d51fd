#pragma once

// Ternary forms F(x, y, z) and the normalizing change of variables that
// sends a direction e to (0, 0, 1).

#include <array>

#include "specrep/mpoly.hpp"

namespace specrep {

using Direction = std::array<Rational, 3>;

struct Normalization {
  MPoly form;              // F
  Direction e;
  Matrix<Rational> u;      // U e = (0, 0, 1)
  Matrix<Rational> u_inv;
  Rational fe;             // F(e)
  MPoly normalized;        // F'(Y) = F(U^{-1} Y) / F(e), so F'(0, 0, 1) = 1
};

/// Requires F homogeneous in x, y, z (rational coefficients, no t) and
/// F(e) != 0; raises kInvalidArgument otherwise.
Normalization normalize_direction(const MPoly& form, const Direction& e);

/// f(x, t) = F'(x, 1, t), monic of t-degree n.
BiPoly dehomogenize(const MPoly& normalized);

/// Linear substitution X -> a X: variable i of the result is sum_j a(i, j) X_j.
MPoly linear_substitute(const MPoly& p, const Matrix<Rational>& a);

Rational eval_form(const MPoly& form, const Direction& e);

}  // namespace specrep
