#include "specrep/represent.hpp"

#include <algorithm>

#include "specrep/certify.hpp"
#include "specrep/factor.hpp"
#include "specrep/mpoly.hpp"

namespace specrep {

const char* to_string(RepKind k) { return k == RepKind::kHermitian ? "hermitian" : "symmetric"; }

namespace {

bool is_real_matrix(const PolyMatrix& m) {
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_real()) return false;
  return true;
}

PolyMatrix diag(const std::vector<Rational>& d) {
  PolyMatrix m(d.size(), d.size());
  for (size_t k = 0; k < d.size(); ++k) m(k, k) = QiPoly(Gauss(d[k]));
  return m;
}

/// Inverse of a matrix with constant nonzero determinant.
PolyMatrix unimodular_inverse(const PolyMatrix& t) {
  const QiPoly d = det(t);
  check_internal(!d.is_zero() && d.degree() == 0, "T is not unimodular");
  const Gauss inv = d.leading().inverse();
  return adjugate(t).map([&](const QiPoly& p) { return p * inv; });
}

void require_supported(const BiPoly& f) {
  const Certificate cert = certify_real_rooted(f);
  if (!cert.verdict) {
    const auto& w = cert.witness.value();
    fail(ErrorKind::kNotRealRooted, "f is not real rooted: a Hermite principal minor is " + w.value.get_str() +
                                        " < 0 at x = " + w.a.get_str() +
                                        ", so f(x, t) has non-real roots there and no self-adjoint M can exist");
  }
}

}  // namespace

PolyMatrix mult_matrix(const IdealLattice& lattice) {
  const auto& alg = lattice.algebra();
  const size_t n = lattice.n();
  PolyMatrix m(n, n);
  const BiPoly tt = BiPoly::linear(QiPoly());
  for (size_t l = 0; l < n; ++l) {
    std::vector<QiPoly> coords;
    const bool ok = solve_in_hnf(lattice.basis(), alg.coords(lattice.numerator(l) * tt), coords);
    check_internal(ok, "lattice is not closed under multiplication by t");
    m.set_column(l, coords);
  }
  return m;
}

Matrix<RatFunc> mult_matrix_in_basis(const CurveAlgebra& alg, const std::vector<FieldElem>& basis,
                                     const FieldElem& u) {
  const size_t n = basis.size();
  if (n != static_cast<size_t>(alg.n())) fail(ErrorKind::kInvalidArgument, "basis has the wrong length");
  auto coords = [&](const FieldElem& v) {
    std::vector<RatFunc> c;
    for (const auto& p : alg.coords(v.num)) c.emplace_back(p, v.den);
    return c;
  };
  Matrix<RatFunc> p(n, n);
  for (size_t l = 0; l < n; ++l) p.set_column(l, coords(basis[l]));
  const RatFunc d = det(p);
  if (d.is_zero()) fail(ErrorKind::kRankDeficient, "elements do not form a basis");
  const Matrix<RatFunc> p_inv = adjugate(p).map([&](const RatFunc& v) { return v / d; });
  Matrix<RatFunc> img(n, n);
  for (size_t l = 0; l < n; ++l) img.set_column(l, coords(alg.mul(u, basis[l])));
  return p_inv * img;
}

Matrix<RadPoly> materialize(const PolyMatrix& n, const std::vector<Rational>& d) {
  const size_t size = n.rows();
  Matrix<RadPoly> m(size, size);
  for (size_t k = 0; k < size; ++k)
    for (size_t l = 0; l < size; ++l) {
      const RadScalar root = RadScalar::sqrt(d[k] * d[l]);
      const Gauss c = root.coeff() * Gauss(Rational(1) / d[l]);
      m(k, l) = RadPoly{n(k, l) * c, n(k, l).is_zero() ? Integer(1) : root.radicand()};
    }
  return m;
}

SpectralRep assemble(RepKind kind, const BiPoly& f, const PolyMatrix& m_i, const PolyMatrix& t,
                     const std::vector<Rational>& d) {
  SpectralRep rep;
  rep.kind = kind;
  rep.f = f;
  rep.m_i = m_i;
  rep.t = t;
  rep.d = d;
  rep.n = unimodular_inverse(t) * m_i * t;
  rep.m = materialize(rep.n, d);
  std::string why;
  check_internal(verify_representation(f, rep, &why), "representation check failed: " + why);
  return rep;
}

SpectralRep hermitian_representation(const BiPoly& f) {
  require_supported(f);
  const CurveData cd = analyze_curve(f);
  if (!check_no_real_ramification(cd))
    fail(ErrorKind::kRealRamification, "discriminant has real roots, impossible for a smooth real-rooted curve");
  const AlgebraPtr alg = make_algebra(f);
  const IdealLattice j = half_different(alg, cd);
  // I = (1/f_t) conj(J), so conj(I) I = (1/f_t) and the scale is c = 1.
  const FieldElem inv_ft = alg->inverse(alg->make(f.dt()));
  const IdealLattice lattice = ideal_scale(ideal_conjugate(j), inv_ft);
  const FieldElem one = alg->make(BiPoly::constant(QiPoly(Gauss(1))));
  const GramForm g = gram_matrix(lattice, one, true);
  check_internal(is_unimodular(g), "Hermitian trace form on I is not unimodular");
  const Diagonalization dz = diagonalize_unimodular(g.poly(), true);
  SpectralRep rep = assemble(RepKind::kHermitian, f, mult_matrix(lattice), dz.t, dz.d);
  rep.lattice = lattice;
  rep.scale = one;
  return rep;
}

int default_search_bound(const BiPoly& f) {
  return 2 * f.t_degree() + std::max(0, resultant_t(f, f.dt()).degree());
}

std::optional<SpectralRep> symmetric_representation_search(const BiPoly& f, const SymmetricSearch& opts,
                                                           SearchStats* stats) {
  require_supported(f);
  const CurveData cd = analyze_curve(f);
  if (!check_no_real_ramification(cd))
    fail(ErrorKind::kRealRamification, "discriminant has real roots, impossible for a smooth real-rooted curve");
  const AlgebraPtr alg = make_algebra(f);
  const int bound = opts.degree_bound >= 0 ? opts.degree_bound : default_search_bound(f);
  SearchStats local;
  SearchStats& st = stats ? *stats : local;

  // Real building blocks q_P q_conj(P), one per conjugate pair of branch points.
  std::vector<IdealLattice> pair_ideals;
  std::vector<int> max_exp;
  for (const auto& p : cd.branch_points) {
    if (sgn(p.a.im()) <= 0) continue;
    pair_ideals.push_back(ideal_mul(prime_at_point(alg, p.a, p.t0), prime_at_point(alg, p.a.conj(), p.t0.conj())));
    max_exp.push_back(p.m());
  }
  // Exponent vectors in [-m, m], ordered by total |e| then lexicographically.
  std::vector<std::vector<int>> exps{{}};
  for (int m : max_exp) {
    std::vector<std::vector<int>> next;
    for (const auto& v : exps)
      for (int e = -m; e <= m; ++e) {
        auto w = v;
        w.push_back(e);
        next.push_back(std::move(w));
      }
    exps = std::move(next);
  }
  auto weight = [](const std::vector<int>& v) {
    int s = 0;
    for (int e : v) s += std::abs(e);
    return s;
  };
  std::stable_sort(exps.begin(), exps.end(), [&](const auto& a, const auto& b) {
    if (weight(a) != weight(b)) return weight(a) < weight(b);
    return a < b;
  });

  const IdealLattice codiff = ideal_from_generators(alg, {alg->inverse(alg->make(f.dt()))});
  for (const auto& eps : exps) {
    ++st.ideals_tried;
    IdealLattice i0 = unit_ideal(alg);
    for (size_t k = 0; k < eps.size(); ++k) i0 = ideal_mul(i0, ideal_pow(pair_ideals[k], eps[k]));
    const IdealLattice target = ideal_mul(codiff, ideal_pow(i0, -2));
    std::optional<SpectralRep> found;
    GeneratorSearch gs;
    gs.degree_bound = bound;
    gs.max_candidates = opts.max_candidates_per_ideal;
    st.candidates_examined += for_each_generator(target, gs, [&](const FieldElem& c) {
      ++st.generators_found;
      for (const FieldElem& sc : {c, alg->neg(c)}) {
        const GramForm g = gram_matrix(i0, sc, false);
        if (!is_unimodular(g)) continue;
        const PolyMatrix gp = g.poly();
        if (!is_real_matrix(gp) || !is_positive_definite(eval_at(gp, Gauss(0)))) continue;
        const Diagonalization dz = diagonalize_unimodular(gp, false);
        SpectralRep rep = assemble(RepKind::kSymmetric, f, mult_matrix(i0), dz.t, dz.d);
        rep.lattice = i0;
        rep.scale = sc;
        found = std::move(rep);
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  if (f.t_degree() == 2 && opts.two_squares_fallback) {
    auto rep = two_squares_representation(f);
    if (rep) st.used_two_squares = true;
    return rep;
  }
  return std::nullopt;
}

bool rational_two_squares(const Rational& q, Rational& s, Rational& w) {
  if (sgn(q) < 0) return false;
  // q = A/B = (A B) / B^2; search A B = s^2 + w^2 over the integers.
  const Integer n = q.get_num() * q.get_den();
  if (n > Integer("1000000000000")) return false;
  for (Integer a = 0; a * a <= n; ++a) {
    const Integer rest = n - a * a;
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      s = Rational(a, q.get_den());
      w = Rational(Integer(sqrt(rest)), q.get_den());
      s.canonicalize();
      w.canonicalize();
      return true;
    }
  }
  return false;
}

std::optional<SpectralRep> two_squares_representation(const BiPoly& f) {
  if (f.t_degree() != 2 || !f.is_monic() || !f.is_real()) return std::nullopt;
  // f = t^2 + p t + r, M = [[-p/2 + u, v], [v, -p/2 - u]] with u^2 + v^2 = p^2/4 - r.
  const QiPoly half_p = f[1] * Gauss(Rational(1, 2));
  const QiPoly disc = half_p * half_p - f[0];
  if (disc.is_zero()) return std::nullopt;
  const QPoly dq = to_rational(disc);
  QiPoly h(Gauss(1));
  int covered = 0;
  for (const auto& [a, mu] : gaussian_roots(dq)) {
    covered += mu;
    if (a.is_real()) {
      if (mu % 2 != 0) return std::nullopt;  // disc changes sign: not real rooted
      h *= pow(QiPoly(std::vector<Gauss>{-a, Gauss(1)}), static_cast<unsigned>(mu / 2));
    } else if (sgn(a.im()) > 0) {
      h *= pow(QiPoly(std::vector<Gauss>{-a, Gauss(1)}), static_cast<unsigned>(mu));
    }
  }
  if (covered != dq.degree()) return std::nullopt;
  Rational s, w;
  if (!rational_two_squares(dq.leading(), s, w)) return std::nullopt;
  std::vector<Gauss> re, im;
  for (const auto& c : h.coeffs()) {
    re.emplace_back(c.re());
    im.emplace_back(c.im());
  }
  const QiPoly hr(re), hi(im);
  const QiPoly u = hr * Gauss(s) - hi * Gauss(w);
  const QiPoly v = hi * Gauss(s) + hr * Gauss(w);
  PolyMatrix m(2, 2);
  m(0, 0) = u - half_p;
  m(1, 1) = -u - half_p;
  m(0, 1) = m(1, 0) = v;
  return assemble(RepKind::kSymmetric, f, m, PolyMatrix::identity(2, QiPoly(Gauss(1))), {Rational(1), Rational(1)});
}

bool verify_representation(const BiPoly& f, const SpectralRep& rep, std::string* why) {
  auto reject = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const size_t n = static_cast<size_t>(std::max(0, f.t_degree()));
  for (const PolyMatrix* m : {&rep.m_i, &rep.t, &rep.n})
    if (m->rows() != n || m->cols() != n) return reject("witness matrices have the wrong size");
  if (rep.d.size() != n || rep.m.rows() != n || rep.m.cols() != n) return reject("D or M has the wrong size");
  if (charpoly(rep.m_i) != f) return reject("charpoly(M_I) != f");
  const QiPoly dt = det(rep.t);
  if (dt.is_zero() || dt.degree() != 0) return reject("det T is not a nonzero constant");
  if (rep.m_i * rep.t != rep.t * rep.n) return reject("N != T^{-1} M_I T");
  for (const auto& v : rep.d)
    if (sgn(v) <= 0) return reject("D is not positive");
  const bool herm = rep.kind == RepKind::kHermitian;
  const PolyMatrix dm = diag(rep.d);
  const PolyMatrix nt = herm ? adjoint(rep.n) : rep.n.transpose();
  if (nt * dm != dm * rep.n) return reject(herm ? "N* D != D N" : "N^T D != D N");
  if (!herm && (!is_real_matrix(rep.m_i) || !is_real_matrix(rep.t) || !is_real_matrix(rep.n)))
    return reject("symmetric representation has non-real entries");
  if (!(rep.m == materialize(rep.n, rep.d))) return reject("M != D^{1/2} N D^{-1/2}");
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l) {
      const RadPoly& a = rep.m(k, l);
      const RadPoly b = herm ? rep.m(l, k).conj() : rep.m(l, k);
      if (!(a == b)) return reject("M is not self-adjoint");
    }
  return true;
}

SpectralRep block_compose(const std::vector<SpectralRep>& reps) {
  if (reps.empty()) fail(ErrorKind::kInvalidArgument, "block_compose of an empty list");
  if (reps.size() == 1) return reps.front();
  std::vector<PolyMatrix> mi, t;
  std::vector<Rational> d;
  BiPoly f = BiPoly::constant(QiPoly(Gauss(1)));
  for (const auto& r : reps) {
    if (r.kind != reps.front().kind) fail(ErrorKind::kInvalidArgument, "block_compose of mixed kinds");
    mi.push_back(r.m_i);
    t.push_back(r.t);
    d.insert(d.end(), r.d.begin(), r.d.end());
    f = f * r.f;
  }
  return assemble(reps.front().kind, f, block_diagonal(mi), block_diagonal(t), d);
}

int degree_valuation(const PolyMatrix& m) {
  int deg = -1;
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) deg = std::max(deg, m(r, c).degree());
  if (deg < 0) fail(ErrorKind::kInvalidArgument, "valuation of the zero matrix");
  return -deg;
}

bool check_degree_bound(const PolyMatrix& m, const BiPoly& f) {
  const int n = f.t_degree();
  std::optional<Rational> best;
  for (int i = 0; i < n; ++i) {
    if (f[i].is_zero()) continue;
    Rational v(-f[i].degree(), n - i);
    v.canonicalize();
    if (!best || v < *best) best = v;
  }
  if (m.is_zero_matrix()) return !best.has_value();
  if (!best) return false;
  return Rational(degree_valuation(m)) == *best;
}

}  // namespace specrep
