#pragma once

// Factorization over Q (Zassenhaus) and extraction of roots lying in Q(i).
//
// Recombination is an exhaustive subset search, exponential in the number
// of modular factors; intended for degrees up to about 20.

#include <utility>
#include <vector>

#include "specrep/poly.hpp"

namespace specrep {

struct Factorization {
  Rational unit;                               // p = unit * prod f^m
  std::vector<std::pair<QPoly, int>> factors;  // monic irreducible over Q

  QPoly expand() const;
};

/// Complete factorization of a nonzero rational polynomial. Factors are
/// sorted by (degree, coefficients) so the output is deterministic.
Factorization factor_over_Q(const QPoly& p);

/// All roots of p in Q(i) with multiplicity, sorted by (re, im). Roots
/// outside Q(i) are silently absent.
std::vector<std::pair<Gauss, int>> gaussian_roots(const QPoly& p);
std::vector<std::pair<Gauss, int>> gaussian_roots(const QiPoly& p);

/// Exact square root of a rational when it is a perfect square.
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace specrep
