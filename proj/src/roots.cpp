#include "specrep/roots.hpp"

#include <algorithm>

namespace specrep {

namespace {

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    QPoly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    // Positive rescaling keeps the sign pattern and tames coefficient growth.
    seq.push_back(r * Rational(1 / abs(r.leading())));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<QPoly>& seq, const Rational& a) {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const auto& q : seq) s.push_back(sgn(q(a)));
  return variations(s);
}

int variations_at_infinity(const std::vector<QPoly>& seq, bool positive) {
  std::vector<int> s;
  for (const auto& q : seq) {
    int sg = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return variations(s);
}

}  // namespace

int sturm_count(const QPoly& p) {
  if (p.is_zero()) fail(ErrorKind::kInvalidArgument, "sturm_count of zero polynomial");
  if (p.degree() == 0) return 0;
  auto seq = sturm_sequence(squarefree_part(p));
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

int sturm_count_in(const QPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) fail(ErrorKind::kInvalidArgument, "sturm_count of zero polynomial");
  if (p.degree() == 0 || !(lo < hi)) return 0;
  auto seq = sturm_sequence(squarefree_part(p));
  return variations_at(seq, lo) - variations_at(seq, hi);
}

bool nonneg_on_R(const QPoly& p) {
  if (p.is_zero()) return true;
  if (sgn(p.leading()) < 0) return false;
  QPoly odd(Rational(1));
  for (const auto& [g, m] : squarefree_decompose(p))
    if (m % 2 == 1) odd *= g;
  return odd.degree() <= 0 || sturm_count(odd) == 0;
}

Integer cauchy_bound(const QPoly& p) {
  if (p.degree() <= 0) return 1;
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeff(k) / p.leading());
    if (r > m) m = r;
  }
  Rational b = m + 1;
  Integer ib = b.get_num() / b.get_den() + 1;
  return ib;
}

int sign_at(const QPoly& p, const Rational& a) { return sgn(p(a)); }

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const QPoly& p) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() <= 0) return out;
  QPoly sq = squarefree_part(p);
  auto seq = sturm_sequence(sq);
  Rational b(cauchy_bound(sq));
  std::vector<std::pair<Rational, Rational>> stack{{-b, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int c = variations_at(seq, lo) - variations_at(seq, hi);
    if (c == 0) continue;
    if (c == 1) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> separating_points(const QPoly& p) {
  if (p.degree() <= 0) return {Rational(0)};
  QPoly sq = squarefree_part(p);
  auto seq = sturm_sequence(sq);
  Rational b(cauchy_bound(sq));
  // Split points are chosen off the roots, so every gap between consecutive
  // roots receives at least one of them.
  auto off_root = [&](const Rational& lo, const Rational& hi) {
    Rational w = (hi - lo) / 2;
    Rational m = lo + w;
    while (sgn(sq(m)) == 0) {
      w /= 3;
      m = lo + w;
    }
    return m;
  };
  std::vector<Rational> cuts{-b, b};
  std::vector<std::pair<Rational, Rational>> stack{{-b, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    if (variations_at(seq, lo) - variations_at(seq, hi) <= 1) continue;
    Rational mid = off_root(lo, hi);
    cuts.push_back(mid);
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

}  // namespace specrep
