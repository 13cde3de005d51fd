#pragma once

// Shared helpers for the unit tests and the acceptance runner: short parsers,
// a seeded generator, random instances and a few independent oracles.

#include <random>
#include <string>
#include <vector>

#include "specrep/certify.hpp"
#include "specrep/curvedata.hpp"
#include "specrep/factor.hpp"
#include "specrep/hvpipeline.hpp"
#include "specrep/ideallat.hpp"
#include "specrep/mpoly.hpp"
#include "specrep/represent.hpp"
#include "specrep/roots.hpp"
#include "specrep/traceform.hpp"

namespace testing {

using namespace specrep;

inline QiPoly P(const std::string& s) { return parse_upoly(s); }
inline QPoly QP(const std::string& s) { return to_rational(parse_upoly(s)); }
inline BiPoly F(const std::string& s) { return parse_bipoly(s); }
inline MPoly MP(const std::string& s) { return parse_poly(s); }
inline Rational R(const std::string& s) { return parse_rational(s); }
inline Gauss G(const std::string& s) { return parse_gauss(s); }

inline PolyMatrix pm(const std::vector<std::vector<std::string>>& rows) {
  PolyMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) m(r, c) = P(rows[r][c]);
  return m;
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }
  Rational rational(long range, long max_den = 1) {
    Rational q(uniform(-range, range), uniform(1, max_den));
    q.canonicalize();
    return q;
  }
  Gauss gauss(long range) { return Gauss(Rational(uniform(-range, range)), Rational(uniform(-range, range))); }
  QPoly qpoly(int degree, long range) {
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k) c.emplace_back(uniform(-range, range));
    return QPoly(c);
  }
  QiPoly qipoly(int degree, long range) {
    std::vector<Gauss> c;
    for (int k = 0; k <= degree; ++k) c.push_back(gauss(range));
    return QiPoly(c);
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Real roots of a squarefree p in (lo, hi) by Descartes' rule of signs and
/// bisection; independent of the Sturm code.
inline int descartes_count(const QPoly& p, const Rational& lo, const Rational& hi, int depth = 0) {
  // q(y) = (y + 1)^n p((lo + hi y) / (1 + y)) maps (0, inf) onto (lo, hi).
  const int n = p.degree();
  QPoly q;
  const QPoly num(std::vector<Rational>{lo, hi}), den(std::vector<Rational>{Rational(1), Rational(1)});
  for (int k = 0; k <= n; ++k) q += pow(num, static_cast<unsigned>(k)) * pow(den, static_cast<unsigned>(n - k)) * p.coeff(k);
  int changes = 0, last = 0;
  for (const auto& c : q.coeffs()) {
    if (sgn(c) == 0) continue;
    if (last != 0 && sgn(c) != last) ++changes;
    last = sgn(c);
  }
  if (changes <= 1 || depth > 200) return changes;
  const Rational mid = (lo + hi) / 2;
  return descartes_count(p, lo, mid, depth + 1) + descartes_count(p, mid, hi, depth + 1) + (sgn(p(mid)) == 0 ? 1 : 0);
}

/// Distinct real roots of p by the Descartes oracle.
inline int oracle_real_roots(const QPoly& p) {
  const QPoly s = squarefree_part(p);
  if (s.degree() <= 0) return 0;
  Rational bound = 1;
  for (int k = 0; k < s.degree(); ++k) bound += abs(s.coeff(k) / s.leading());
  return descartes_count(s, -bound, bound);
}

/// Random Hermitian n x n matrix with Gaussian-integer linear entries,
/// M = M1 x + M0.
inline PolyMatrix random_hermitian_linear(Rng& rng, size_t n, long range, bool real = false) {
  PolyMatrix m(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = r; c < n; ++c) {
      if (r == c || real) {
        m(r, c) = QiPoly(std::vector<Gauss>{Gauss(Rational(rng.uniform(-range, range))),
                                            Gauss(Rational(rng.uniform(-range, range)))});
      } else {
        m(r, c) = QiPoly(std::vector<Gauss>{rng.gauss(range), rng.gauss(range)});
      }
      m(c, r) = m(r, c).conj();
    }
  return m;
}

/// The curated corpus of smooth, real-rooted curves with branch points over
/// Q(i). The fixed members are checked by the tests; the t - p(x) members
/// come from the seed.
struct CorpusEntry {
  std::string name;
  BiPoly f;
};

inline std::vector<CorpusEntry> curated_corpus(uint64_t seed = 7) {
  std::vector<CorpusEntry> c{
      {"t^2 - x^2 - 1", F("t^2 - x^2 - 1")},
      {"t^2 - (x^2+1)(x^2+4)", F("t^2 - (x^2+1)*(x^2+4)")},
      {"irreducible cubic", F("t^3 - 3*t^2*x - 6*t^2 + 12*t*x + 9*t - 11*x - 2")},
      {"cubic, Hermitian pencil charpoly", F("t^3 + 5*t^2*x + 7*t*x^2 - 4*t + 3*x^3 - 4*x")},
      {"cubic, total ramification at x = -i", F("t^3 + 3*t^2 - 3*t*x^2 + 2*x^3 - 3*x^2 + 2*x - 2")},
      {"cubic, total ramification at x = -1 + i", F("t^3 - 3*t^2*x - 3*t^2 - 3*t + 4*x^3 + 12*x^2 + 17*x + 9")},
      {"quartic, two disjoint conics", F("(t^2 - x^2 - 1)*(t^2 - x^2 - 4)")},
  };
  Rng rng(seed);
  for (int k = 0; k < 5; ++k) {
    const QPoly p = rng.qpoly(static_cast<int>(rng.uniform(1, 5)), 9);
    BiPoly f = BiPoly::linear(to_gauss(p));
    c.push_back({"t - p(x) #" + std::to_string(k) + ": " + to_string(f), f});
  }
  return c;
}

inline bool all_real_entries(const PolyMatrix& m) {
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_real()) return false;
  return true;
}

/// Congruence T^s' G T.
inline PolyMatrix congruence(const PolyMatrix& g, const PolyMatrix& t, bool hermitian) {
  return (hermitian ? adjoint(t) : t.transpose()) * g * t;
}

/// Random unimodular matrix as a product of elementary operations with
/// polynomial multipliers.
inline PolyMatrix random_unimodular(Rng& rng, size_t n, int steps, int degree, bool real) {
  PolyMatrix u = PolyMatrix::identity(n, QiPoly(Gauss(1)));
  for (int s = 0; s < steps; ++s) {
    const size_t i = static_cast<size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    size_t j = static_cast<size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const QiPoly q = real ? to_gauss(rng.qpoly(static_cast<int>(rng.uniform(0, degree)), 3))
                          : rng.qipoly(static_cast<int>(rng.uniform(0, degree)), 2);
    for (size_t r = 0; r < n; ++r) u(r, j) += u(r, i) * q;  // column j += q * column i
  }
  return u;
}

}  // namespace testing
