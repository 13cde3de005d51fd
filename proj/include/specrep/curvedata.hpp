#pragma once

// Discriminant, branch points and smoothness of the affine curve f = 0.

#include <vector>

#include "specrep/bipoly.hpp"

namespace specrep {

struct BranchPoint {
  Gauss a;   // x-coordinate
  Gauss t0;  // multiple root of f(a, t)
  int e;     // multiplicity of t0 in f(a, t)
  int m() const { return e - 1; }
};

struct CurveData {
  BiPoly f;
  QiPoly disc;  // Res_t(f, f_t)
  std::vector<BranchPoint> branch_points;  // sorted by (a, t0), closed under conjugation
  bool smooth = true;
};

/// Requires f monic in t with rational coefficients. Raises kNotSquarefree,
/// kNotSmooth or kBranchPointNotRational as described in the README.
CurveData analyze_curve(const BiPoly& f);

/// True iff the discriminant has no real roots.
bool check_no_real_ramification(const CurveData& cd);

}  // namespace specrep
