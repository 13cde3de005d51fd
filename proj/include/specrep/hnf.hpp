#pragma once

// Column Hermite normal form over F[x], F = Q(i).
//
// The canonical form of a full-rank submodule of F[x]^n is the unique n x n
// upper-triangular basis H with monic diagonal and deg H(r, c) < deg H(r, r)
// for every c > r. Two generating sets of the same module give the same H.

#include <vector>

#include "specrep/matrix.hpp"
#include "specrep/poly.hpp"

namespace specrep {

using PolyMatrix = Matrix<QiPoly>;
using Column = std::vector<QiPoly>;

/// Raises kRankDeficient when the columns span a module of rank < n.
PolyMatrix hnf_reduce(const std::vector<Column>& columns, size_t n);

/// Coordinates of v in the basis H (upper triangular, nonzero diagonal) over
/// F[x]; returns false when v is not in the column span.
bool solve_in_hnf(const PolyMatrix& h, const Column& v, std::vector<QiPoly>& coords);

}  // namespace specrep
