#pragma once

// Squarefree decomposition and exact real root counting over Q.

#include <utility>
#include <vector>

#include "specrep/poly.hpp"

namespace specrep {

/// Yun's algorithm. Returns monic, squarefree, pairwise coprime g_i with
/// distinct multiplicities m_i such that p = lc(p) * prod g_i^{m_i}, sorted by
/// increasing multiplicity. Raises kInvalidArgument for p = 0.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decompose(const Poly<K>& p) {
  if (p.is_zero()) fail(ErrorKind::kInvalidArgument, "squarefree decomposition of zero");
  std::vector<std::pair<Poly<K>, int>> out;
  Poly<K> a = p.monic();
  if (a.degree() == 0) return out;
  Poly<K> da = a.derivative();
  Poly<K> b = gcd(a, da);
  Poly<K> c = exact_div(a, b);
  Poly<K> d = exact_div(da, b) - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    Poly<K> g = gcd(c, d);
    c = exact_div(c, g);
    d = exact_div(d, g) - c.derivative();
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
  }
  return out;
}

/// Monic squarefree part (product of the distinct irreducible factors).
template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
  Poly<K> r(K(1));
  for (const auto& [g, m] : squarefree_decompose(p)) r *= g;
  return r;
}

/// Number of distinct real roots of p (Sturm). Raises for p = 0.
int sturm_count(const QPoly& p);

/// Number of distinct real roots in the half-open interval (lo, hi].
int sturm_count_in(const QPoly& p, const Rational& lo, const Rational& hi);

/// True iff p(a) >= 0 for every real a.
bool nonneg_on_R(const QPoly& p);

/// An integer B with every real root of p in (-B, B).
Integer cauchy_bound(const QPoly& p);

/// Disjoint intervals (lo, hi], sorted, each holding exactly one real root of
/// the squarefree part of p.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const QPoly& p);

/// Sorted rationals, none a root of p, meeting every connected component of
/// the complement of the real zero set of p (so they realize every sign p
/// takes away from its roots).
std::vector<Rational> separating_points(const QPoly& p);

/// Sign of p(a): -1, 0 or 1.
int sign_at(const QPoly& p, const Rational& a);

}  // namespace specrep
