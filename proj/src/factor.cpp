#include "specrep/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "specrep/roots.hpp"

namespace specrep {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over Z/p, p an odd prime below 2^31. Low degree first, trimmed.

using ZpPoly = std::vector<int64_t>;

struct Zp {
  int64_t p;

  int64_t norm(int64_t a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  int64_t mul(int64_t a, int64_t b) const { return (a * b) % p; }
  int64_t pow(int64_t a, uint64_t e) const {
    int64_t r = 1;
    a = norm(a);
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  int64_t inv(int64_t a) const {
    if (norm(a) == 0) fail(ErrorKind::kInternalCheckFailed, "inverse of 0 mod p");
    return pow(a, static_cast<uint64_t>(p - 2));
  }

  static void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  ZpPoly add(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t k = 0; k < a.size(); ++k) r[k] = a[k];
    for (size_t k = 0; k < b.size(); ++k) r[k] = norm(r[k] + b[k]);
    trim(r);
    return r;
  }
  ZpPoly sub(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t k = 0; k < a.size(); ++k) r[k] = a[k];
    for (size_t k = 0; k < b.size(); ++k) r[k] = norm(r[k] - b[k]);
    trim(r);
    return r;
  }
  ZpPoly mul(const ZpPoly& a, const ZpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  ZpPoly scale(ZpPoly a, int64_t s) const {
    for (auto& v : a) v = mul(v, norm(s));
    trim(a);
    return a;
  }
  std::pair<ZpPoly, ZpPoly> divmod(const ZpPoly& a, const ZpPoly& b) const {
    if (b.empty()) fail(ErrorKind::kInternalCheckFailed, "division by zero mod p");
    if (a.size() < b.size()) return {{}, a};
    ZpPoly r = a, q(a.size() - b.size() + 1, 0);
    const int64_t li = inv(b.back());
    const size_t db = b.size() - 1;
    for (size_t k = r.size(); k-- > db;) {
      if (!r[k]) continue;
      int64_t f = mul(r[k], li);
      q[k - db] = f;
      for (size_t j = 0; j <= db; ++j) r[k - db + j] = norm(r[k - db + j] - f * b[j] % p);
    }
    r.resize(db);
    trim(r);
    trim(q);
    return {q, r};
  }
  ZpPoly rem(const ZpPoly& a, const ZpPoly& b) const { return divmod(a, b).second; }
  ZpPoly monic(const ZpPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }
  ZpPoly gcd(ZpPoly a, ZpPoly b) const {
    while (!b.empty()) {
      ZpPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  /// s, t with s a + t b = gcd(a, b) (monic).
  void xgcd(const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t) const {
    ZpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      ZpPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    int64_t li = inv(r0.back());
    s = scale(s0, li);
    t = scale(t0, li);
  }
  ZpPoly deriv(const ZpPoly& a) const {
    ZpPoly d;
    for (size_t k = 1; k < a.size(); ++k) d.push_back(mul(a[k], static_cast<int64_t>(k) % p));
    trim(d);
    return d;
  }
  ZpPoly powmod(ZpPoly base, const Integer& e, const ZpPoly& m) const {
    ZpPoly r{1};
    base = rem(base, m);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t k = bits; k-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), k)) r = rem(mul(r, base), m);
    }
    return r;
  }
};

/// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ZpPoly, int>> distinct_degree(const Zp& z, ZpPoly f) {
  std::vector<std::pair<ZpPoly, int>> out;
  const ZpPoly x{0, 1};
  ZpPoly h = x;
  const Integer p(static_cast<long>(z.p));
  for (int i = 1; static_cast<int>(f.size()) - 1 >= 2 * i; ++i) {
    h = z.powmod(h, p, f);
    ZpPoly g = z.gcd(z.sub(h, x), f);
    if (g.size() > 1) {
      out.emplace_back(g, i);
      f = z.divmod(f, g).first;
      h = z.rem(h, f);
    }
  }
  if (f.size() > 1) out.emplace_back(z.monic(f), static_cast<int>(f.size()) - 1);
  return out;
}

/// Cantor-Zassenhaus equal-degree splitting.
void equal_degree(const Zp& z, const ZpPoly& g, int d, std::mt19937_64& rng,
                  std::vector<ZpPoly>& out) {
  const int deg = static_cast<int>(g.size()) - 1;
  if (deg == d) {
    out.push_back(g);
    return;
  }
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(z.p), static_cast<unsigned long>(d));
  const Integer e = (pd - 1) / 2;
  std::uniform_int_distribution<int64_t> dist(0, z.p - 1);
  for (;;) {
    ZpPoly a(static_cast<size_t>(deg));
    for (auto& v : a) v = dist(rng);
    Zp::trim(a);
    if (a.size() <= 1) continue;
    ZpPoly b = z.sub(z.powmod(a, e, g), ZpPoly{1});
    ZpPoly h = z.gcd(b, g);
    const int dh = static_cast<int>(h.size()) - 1;
    if (dh > 0 && dh < deg) {
      equal_degree(z, h, d, rng, out);
      equal_degree(z, z.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Integer polynomials.

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (size_t k = 0; k < a.size(); ++k) r[k] = a[k];
  for (size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  trim(r);
  return r;
}

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

ZpPoly to_zp(const ZPoly& a, const Zp& z) {
  ZpPoly r;
  const Integer p(static_cast<long>(z.p));
  for (const auto& c : a) r.push_back(mod_pos(c, p).get_si());
  Zp::trim(r);
  return r;
}

ZPoly from_zp(const ZpPoly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<long>(c));
  return r;
}

QPoly to_qpoly(const ZPoly& a) {
  std::vector<Rational> c;
  for (const auto& v : a) c.emplace_back(v);
  return QPoly(std::move(c));
}

ZPoly primitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

/// Lifts F = u w (mod p) to F = u w (mod p^k), u monic, lc(w) = lc(F).
void hensel_lift(const Zp& z, const ZPoly& F, ZPoly& u, ZPoly& w, int k) {
  ZpPoly s, t;
  z.xgcd(to_zp(u, z), to_zp(w, z), s, t);
  const Integer p(static_cast<long>(z.p));
  Integer pj = p;
  w.back() = F.back();
  for (int j = 1; j < k; ++j) {
    ZPoly diff = zsub(F, zmul(u, w));
    for (auto& c : diff) {
      if (c % pj != 0) fail(ErrorKind::kInternalCheckFailed, "Hensel lifting lost congruence");
      c /= pj;
    }
    ZpPoly e = to_zp(diff, z);
    ZpPoly du = z.rem(z.mul(t, e), to_zp(u, z));
    ZpPoly dw = z.divmod(z.sub(e, z.mul(to_zp(w, z), du)), to_zp(u, z)).first;
    ZPoly du_z = from_zp(du), dw_z = from_zp(dw);
    if (u.size() < du_z.size()) u.resize(du_z.size(), Integer(0));
    for (size_t q = 0; q < du_z.size(); ++q) u[q] += pj * du_z[q];
    if (w.size() < dw_z.size()) w.resize(dw_z.size(), Integer(0));
    for (size_t q = 0; q < dw_z.size(); ++q) w[q] += pj * dw_z[q];
    pj *= p;
  }
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Divides G by h over Z if h | G exactly.
bool try_divide(const ZPoly& G, const ZPoly& h, ZPoly& quotient) {
  if (h.size() > G.size()) return false;
  if (G.front() != 0 && h.front() != 0 && G.front() % h.front() != 0) return false;
  auto [q, r] = divmod(to_qpoly(G), to_qpoly(h));
  if (!r.is_zero()) return false;
  ZPoly out;
  for (const auto& c : q.coeffs()) {
    if (c.get_den() != 1) return false;
    out.push_back(c.get_num());
  }
  quotient = std::move(out);
  return true;
}

/// Irreducible factors over Z of a primitive squarefree G with lc > 0.
std::vector<ZPoly> factor_squarefree(const ZPoly& G) {
  const int n = static_cast<int>(G.size()) - 1;
  if (n <= 1) return {G};

  // Choose among a few good primes the one with the fewest modular factors.
  Zp best{0};
  std::vector<std::pair<ZpPoly, int>> best_ddf;
  size_t best_count = SIZE_MAX;
  int tried = 0;
  for (long p = 11; tried < 5 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    Zp z{p};
    ZpPoly g = to_zp(G, z);
    if (static_cast<int>(g.size()) - 1 != n) continue;
    if (z.gcd(g, z.deriv(g)).size() != 1) continue;
    ++tried;
    auto ddf = distinct_degree(z, z.monic(g));
    size_t count = 0;
    for (const auto& [h, d] : ddf) count += (h.size() - 1) / static_cast<size_t>(d);
    if (count < best_count) {
      best_count = count;
      best = z;
      best_ddf = std::move(ddf);
    }
  }
  if (best_count == 1) return {G};

  std::mt19937_64 rng(0x5eed + static_cast<uint64_t>(n));
  std::vector<ZpPoly> modular;
  for (const auto& [h, d] : best_ddf) equal_degree(best, h, d, rng, modular);
  std::sort(modular.begin(), modular.end());

  // Mignotte-style bound on factor coefficients: 2^n (n+1) max|c| lc.
  Integer maxc = 0;
  for (const auto& c : G) maxc = std::max<Integer>(maxc, abs(c));
  Integer bound = (Integer(1) << n) * (n + 1) * maxc * G.back();
  const Integer p(static_cast<long>(best.p));
  Integer pk = p;
  int k = 1;
  while (pk <= 2 * bound) {
    pk *= p;
    ++k;
  }

  // Lift one factor at a time against the product of the rest.
  std::vector<ZPoly> lifted;
  ZPoly cur = G;
  const Integer lc = G.back();
  for (size_t i = 0; i + 1 < modular.size(); ++i) {
    ZpPoly rest{best.norm(mod_pos(lc, p).get_si())};
    for (size_t j = i + 1; j < modular.size(); ++j) rest = best.mul(rest, modular[j]);
    ZPoly u = from_zp(modular[i]), w = from_zp(rest);
    hensel_lift(best, cur, u, w, k);
    for (auto& c : u) c = mod_pos(c, pk);
    for (auto& c : w) c = mod_pos(c, pk);
    lifted.push_back(u);
    cur = w;
  }
  {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), Integer(mod_pos(lc, pk)).get_mpz_t(), pk.get_mpz_t());
    for (auto& c : cur) c = mod_pos(c * inv, pk);
    lifted.push_back(cur);
  }

  // Subset recombination.
  std::vector<ZPoly> out;
  std::vector<size_t> remaining(lifted.size());
  for (size_t k2 = 0; k2 < remaining.size(); ++k2) remaining[k2] = k2;
  ZPoly rest = G;
  const Integer half = pk / 2;
  for (size_t s = 1; 2 * s <= remaining.size();) {
    bool found = false;
    std::vector<bool> pick(remaining.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(s), true);
    do {
      ZPoly h{rest.back()};
      for (size_t q = 0; q < remaining.size(); ++q) {
        if (!pick[q]) continue;
        h = zmul(h, lifted[remaining[q]]);
        for (auto& c : h) c = mod_pos(c, pk);
      }
      for (auto& c : h)
        if (c > half) c -= pk;
      trim(h);
      h = primitive(h);
      ZPoly quotient;
      if (try_divide(rest, h, quotient)) {
        out.push_back(h);
        rest = quotient;
        std::vector<size_t> keep;
        for (size_t q = 0; q < remaining.size(); ++q)
          if (!pick[q]) keep.push_back(remaining[q]);
        remaining = std::move(keep);
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++s;
  }
  if (rest.size() > 1) out.push_back(primitive(rest));
  return out;
}

bool factor_less(const std::pair<QPoly, int>& a, const std::pair<QPoly, int>& b) {
  if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
  auto ca = a.first.coeffs(), cb = b.first.coeffs();
  for (size_t k = ca.size(); k-- > 0;)
    if (ca[k] != cb[k]) return ca[k] < cb[k];
  return a.second < b.second;
}

}  // namespace

QPoly Factorization::expand() const {
  QPoly r(unit);
  for (const auto& [f, m] : factors) r *= pow(f, static_cast<unsigned>(m));
  return r;
}

Factorization factor_over_Q(const QPoly& p) {
  if (p.is_zero()) fail(ErrorKind::kInvalidArgument, "factorization of zero");
  Factorization out;
  out.unit = p.leading();
  for (const auto& [g, m] : squarefree_decompose(p)) {
    auto zc = primitive_integer_coeffs(g);
    for (const auto& h : factor_squarefree(zc)) out.factors.emplace_back(to_qpoly(h).monic(), m);
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(q.get_den().get_mpz_t()))
    return false;
  Integer n = sqrt(q.get_num()), d = sqrt(q.get_den());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

std::vector<std::pair<Gauss, int>> gaussian_roots(const QPoly& p) {
  std::vector<std::pair<Gauss, int>> out;
  if (p.is_zero()) return out;
  for (const auto& [g, m] : factor_over_Q(p).factors) {
    if (g.degree() == 1) {
      out.emplace_back(Gauss(-g.coeff(0)), m);
    } else if (g.degree() == 2) {
      const Rational b = g.coeff(1), c = g.coeff(0);
      Rational d;
      if (!rational_sqrt(4 * c - b * b, d)) continue;
      out.emplace_back(Gauss(-b / 2, d / 2), m);
      out.emplace_back(Gauss(-b / 2, -d / 2), m);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  return out;
}

std::vector<std::pair<Gauss, int>> gaussian_roots(const QiPoly& p) {
  if (p.is_real()) return gaussian_roots(to_rational(p));
  std::vector<std::pair<Gauss, int>> out;
  QPoly norm = to_rational(p * p.conj());
  for (const auto& [r, m] : gaussian_roots(norm)) {
    (void)m;
    QiPoly q = p;
    const QiPoly lin(std::vector<Gauss>{-r, Gauss(1)});
    int mult = 0;
    for (;;) {
      auto [quo, rem] = divmod(q, lin);
      if (!rem.is_zero()) break;
      ++mult;
      q = quo;
    }
    if (mult > 0) out.emplace_back(r, mult);
  }
  return out;
}

}  // namespace specrep
