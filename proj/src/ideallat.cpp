#include "specrep/ideallat.hpp"

#include <algorithm>

#include "specrep/linalg.hpp"

namespace specrep {

namespace {

void check_same_ambient(const IdealLattice& a, const IdealLattice& b) {
  if (a.algebra_ptr() != b.algebra_ptr() && a.algebra().f() != b.algebra().f())
    fail(ErrorKind::kInvalidArgument, "ideals of different curves");
}

QiPoly entry_content(const PolyMatrix& m) {
  QiPoly g;
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) g = gcd(g, m(r, c));
  return g;
}

}  // namespace

IdealLattice IdealLattice::from_columns(AlgebraPtr alg, const std::vector<Column>& columns, const QiPoly& den) {
  if (den.is_zero()) fail(ErrorKind::kInvalidArgument, "zero lattice denominator");
  IdealLattice out;
  out.alg_ = std::move(alg);
  out.basis_ = hnf_reduce(columns, static_cast<size_t>(out.alg_->n()));
  out.den_ = den.monic();
  QiPoly g = gcd(entry_content(out.basis_), out.den_);
  if (g.degree() > 0) {
    out.basis_ = out.basis_.map([&](const QiPoly& p) { return exact_div(p, g); });
    out.den_ = exact_div(out.den_, g);
  }
  return out;
}

FieldElem IdealLattice::element(size_t k) const { return alg_->make(numerator(k), den_); }

std::vector<FieldElem> IdealLattice::elements() const {
  std::vector<FieldElem> out;
  for (size_t k = 0; k < n(); ++k) out.push_back(element(k));
  return out;
}

std::vector<RatFunc> IdealLattice::coordinates(const FieldElem& u) const {
  // basis * c = den * u
  const size_t m = n();
  Column v = alg_->coords(u.num);
  std::vector<RatFunc> rest;
  for (const auto& p : v) rest.emplace_back(p * den_, u.den);
  std::vector<RatFunc> c(m);
  for (size_t r = m; r-- > 0;) {
    c[r] = rest[r] / RatFunc(basis_(r, r));
    if (c[r].is_zero()) continue;
    for (size_t k = 0; k <= r; ++k) rest[k] -= c[r] * RatFunc(basis_(k, r));
  }
  return c;
}

bool IdealLattice::contains(const FieldElem& u) const {
  auto c = coordinates(u);
  return std::all_of(c.begin(), c.end(), [](const RatFunc& r) { return r.is_polynomial(); });
}

bool IdealLattice::is_closed_under_t() const {
  const FieldElem t = alg_->t();
  for (size_t k = 0; k < n(); ++k)
    if (!contains(alg_->mul(t, element(k)))) return false;
  return true;
}

bool IdealLattice::is_real() const {
  if (!den_.is_real()) return false;
  for (size_t r = 0; r < n(); ++r)
    for (size_t c = 0; c < n(); ++c)
      if (!basis_(r, c).is_real()) return false;
  return true;
}

bool operator==(const IdealLattice& a, const IdealLattice& b) {
  if (a.alg_ != b.alg_ && a.alg_->f() != b.alg_->f()) return false;
  return a.den_ == b.den_ && a.basis_ == b.basis_;
}

IdealLattice unit_ideal(const AlgebraPtr& alg) {
  return ideal_from_generators(alg, {alg->make(BiPoly::constant(QiPoly(Gauss(1))))});
}

IdealLattice ideal_from_generators(const AlgebraPtr& alg, const std::vector<FieldElem>& gens) {
  QiPoly common(Gauss(1));
  bool any = false;
  for (const auto& g : gens) {
    if (g.num.is_zero()) continue;
    any = true;
    common = lcm(common, g.den);
  }
  if (!any) fail(ErrorKind::kInvalidArgument, "zero module");
  const BiPoly tt = BiPoly::linear(QiPoly());
  std::vector<Column> cols;
  for (const auto& g : gens) {
    if (g.num.is_zero()) continue;
    BiPoly cur = alg->reduce(g.num * BiPoly::constant(exact_div(common, g.den)));
    for (int k = 0; k < alg->n(); ++k) {
      cols.push_back(alg->coords(cur));
      cur = alg->reduce(cur * tt);
    }
  }
  return IdealLattice::from_columns(alg, cols, common);
}

IdealLattice ideal_mul(const IdealLattice& a, const IdealLattice& b) {
  check_same_ambient(a, b);
  const auto& alg = a.algebra();
  std::vector<Column> cols;
  for (size_t k = 0; k < a.n(); ++k)
    for (size_t l = 0; l < b.n(); ++l) cols.push_back(alg.coords(a.numerator(k) * b.numerator(l)));
  return IdealLattice::from_columns(a.algebra_ptr(), cols, a.den() * b.den());
}

IdealLattice ideal_scale(const IdealLattice& a, const FieldElem& u) {
  if (u.num.is_zero()) fail(ErrorKind::kInvalidArgument, "scaling an ideal by zero");
  const auto& alg = a.algebra();
  std::vector<Column> cols;
  for (size_t k = 0; k < a.n(); ++k) cols.push_back(alg.coords(a.numerator(k) * u.num));
  return IdealLattice::from_columns(a.algebra_ptr(), cols, a.den() * u.den);
}

IdealLattice ideal_conjugate(const IdealLattice& a) {
  if (!a.algebra().is_real()) fail(ErrorKind::kInvalidArgument, "conjugation needs f with real coefficients");
  std::vector<Column> cols;
  for (size_t k = 0; k < a.n(); ++k) {
    Column c = a.basis().column(k);
    for (auto& p : c) p = p.conj();
    cols.push_back(std::move(c));
  }
  return IdealLattice::from_columns(a.algebra_ptr(), cols, a.den().conj());
}

IdealLattice ideal_inverse(const IdealLattice& a) {
  // (B : I) = f_t * I^dual, where I^dual is the trace dual of I.
  const auto& alg = a.algebra();
  const size_t n = a.n();
  PolyMatrix h(n, n);
  for (size_t k = 0; k < n; ++k)
    for (size_t l = k; l < n; ++l) {
      RatFunc tr = alg.trace(alg.make(a.numerator(k) * a.numerator(l)));
      h(k, l) = h(l, k) = tr.num();  // traces of integral elements are polynomials
    }
  const QiPoly d = det(h);
  if (d.is_zero()) fail(ErrorKind::kNotInvertible, "degenerate trace form (f not separable)");
  const PolyMatrix adj = adjugate(h);
  const BiPoly ft_den = alg.f().dt() * BiPoly::constant(a.den());
  std::vector<Column> cols;
  for (size_t j = 0; j < n; ++j) {
    BiPoly s;
    for (size_t k = 0; k < n; ++k) s = s + a.numerator(k) * BiPoly::constant(adj(k, j));
    cols.push_back(alg.coords(s * ft_den));
  }
  IdealLattice inv = IdealLattice::from_columns(a.algebra_ptr(), cols, d);
  if (ideal_mul(a, inv) != unit_ideal(a.algebra_ptr()))
    fail(ErrorKind::kNotInvertible, "I * (B : I) != B");
  return inv;
}

IdealLattice ideal_pow(const IdealLattice& a, int e) {
  IdealLattice base = e < 0 ? ideal_inverse(a) : a;
  IdealLattice r = unit_ideal(a.algebra_ptr());
  for (int k = 0; k < std::abs(e); ++k) r = ideal_mul(r, base);
  return r;
}

IdealLattice prime_at_point(const AlgebraPtr& alg, const Gauss& a, const Gauss& t0) {
  if (!alg->f().eval(a, t0).is_zero())
    fail(ErrorKind::kInvalidArgument, "point (" + to_string(a) + ", " + to_string(t0) + ") is not on the curve");
  const QiPoly xa(std::vector<Gauss>{-a, Gauss(1)});
  return ideal_from_generators(alg, {alg->make(BiPoly::constant(xa)), alg->make(BiPoly::linear(QiPoly(t0)))});
}

IdealLattice half_different(const AlgebraPtr& alg, const CurveData& cd) {
  IdealLattice j = unit_ideal(alg);
  for (const auto& p : cd.branch_points) {
    if (p.a.is_real())
      fail(ErrorKind::kRealRamification, "real branch point at x = " + to_string(p.a) +
                                             " (a real-rooted f on a smooth curve cannot ramify over R)");
    if (sgn(p.a.im()) > 0) j = ideal_mul(j, ideal_pow(prime_at_point(alg, p.a, p.t0), p.m()));
  }
  const IdealLattice ft = ideal_from_generators(alg, {alg->make(alg->f().dt())});
  check_internal(ideal_mul(ideal_conjugate(j), j) == ft, "half different: conj(J) * J != (f_t)");
  return j;
}

// ---------------------------------------------------------------------------
// Principal generator search

size_t for_each_generator(const IdealLattice& ideal, const GeneratorSearch& opts,
                          const std::function<bool(const FieldElem&)>& visit) {
  const auto& alg = ideal.algebra();
  const PolyMatrix& h = ideal.basis();
  const size_t n = ideal.n();
  const int bound = std::max(0, opts.degree_bound);
  const size_t per = static_cast<size_t>(bound) + 1;

  // Unknowns: coefficient of x^j in the lattice coordinate c_l, column
  // index (j, l) laid out high degree first so elimination pivots on high
  // degrees and the free (kernel) directions are the low-degree ones.
  const size_t unknowns = n * per;
  auto col_of = [&](size_t l, size_t j) { return (per - 1 - j) * n + l; };
  int max_h = 0;
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) max_h = std::max(max_h, h(r, c).degree());
  std::vector<std::vector<Gauss>> rows;
  for (size_t k = 0; k < n; ++k)
    for (int d = bound + 1; d <= bound + max_h; ++d) {
      std::vector<Gauss> row(unknowns, Gauss(0));
      bool nonzero = false;
      for (size_t l = 0; l < n; ++l)
        for (size_t j = 0; j < per; ++j) {
          Gauss v = h(k, l).coeff(d - static_cast<int>(j));
          if (v.is_zero()) continue;
          row[col_of(l, j)] = v;
          nonzero = true;
        }
      if (nonzero) rows.push_back(std::move(row));
    }
  std::vector<std::vector<Gauss>> kernel;
  if (rows.empty()) {
    for (size_t c = unknowns; c-- > 0;) {
      std::vector<Gauss> v(unknowns, Gauss(0));
      v[c] = Gauss(1);
      kernel.push_back(std::move(v));
    }
  } else {
    Matrix<Gauss> a(rows.size(), unknowns);
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < unknowns; ++c) a(r, c) = rows[r][c];
    kernel = nullspace(a);
    std::reverse(kernel.begin(), kernel.end());  // lowest-degree free direction first
  }
  if (kernel.empty()) return 0;

  auto to_element = [&](const std::vector<Gauss>& v) {
    BiPoly g;
    for (size_t l = 0; l < n; ++l) {
      std::vector<Gauss> cl(per, Gauss(0));
      for (size_t j = 0; j < per; ++j) cl[j] = v[col_of(l, j)];
      QiPoly c(std::move(cl));
      if (!c.is_zero()) g = g + ideal.numerator(l) * BiPoly::constant(c);
    }
    return g;
  };
  const int target = det(h).degree();
  size_t examined = 0;
  bool stop = false;
  auto test = [&](const std::vector<Gauss>& v) {
    ++examined;
    BiPoly g = to_element(v);
    if (g.is_zero()) return;
    QiPoly nm = alg.norm(g);
    if (nm.is_zero() || nm.degree() != target) return;
    stop = visit(alg.make(g, ideal.den()));
  };

  // Sweep subsets of size 1, 2, ... with signs (+, +-, +-, ...).
  const size_t dim = kernel.size();
  for (size_t size = 1; size <= dim && !stop && examined < opts.max_candidates; ++size) {
    std::vector<size_t> idx(size);
    for (size_t k = 0; k < size; ++k) idx[k] = k;
    for (;;) {
      for (unsigned long signs = 0; signs < (1ul << (size - 1)) && !stop && examined < opts.max_candidates; ++signs) {
        std::vector<Gauss> v = kernel[idx[0]];
        for (size_t k = 1; k < size; ++k) {
          const bool minus = (signs >> (k - 1)) & 1ul;
          for (size_t c = 0; c < unknowns; ++c)
            if (!kernel[idx[k]][c].is_zero()) v[c] += minus ? -kernel[idx[k]][c] : kernel[idx[k]][c];
        }
        test(v);
      }
      if (stop || examined >= opts.max_candidates) break;
      size_t p = size;
      while (p > 0 && idx[p - 1] == dim - size + p - 1) --p;
      if (p == 0) break;
      ++idx[p - 1];
      for (size_t k = p; k < size; ++k) idx[k] = idx[k - 1] + 1;
    }
  }
  return examined;
}

std::optional<FieldElem> principal_generator_search(const IdealLattice& ideal, int degree_bound) {
  std::optional<FieldElem> found;
  GeneratorSearch opts;
  opts.degree_bound = degree_bound;
  for_each_generator(ideal, opts, [&](const FieldElem& g) {
    found = g;
    return true;
  });
  if (found)
    check_internal(ideal_from_generators(ideal.algebra_ptr(), {*found}) == ideal,
                   "generator search: (g) differs from the ideal");
  return found;
}

}  // namespace specrep
