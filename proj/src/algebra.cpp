#include "specrep/algebra.hpp"

namespace specrep {

namespace {

QiPoly content(const BiPoly& g) {
  QiPoly c;
  for (const auto& p : g.tcoeffs()) c = gcd(c, p);
  return c;
}

BiPoly scale(const BiPoly& g, const QiPoly& s) { return g * BiPoly::constant(s); }

BiPoly divide_content(const BiPoly& g, const QiPoly& s) {
  std::vector<QiPoly> c;
  for (const auto& p : g.tcoeffs()) c.push_back(exact_div(p, s));
  return BiPoly(std::move(c));
}

}  // namespace

CurveAlgebra::CurveAlgebra(BiPoly f) : f_(std::move(f)) {
  if (f_.t_degree() < 1 || !f_.is_monic())
    fail(ErrorKind::kNotMonic, "f must be monic in t of degree >= 1");
  n_ = f_.t_degree();
  real_ = f_.is_real();
  // Newton: p_k = -(k a_{n-k} + sum_{j=1}^{k-1} a_{n-j} p_{k-j}) for k <= n,
  //         p_k = -sum_{j=1}^{n} a_{n-j} p_{k-j} for k > n.
  const size_t count = static_cast<size_t>(2 * n_ - 1);
  power_sums_.assign(count, QiPoly());
  power_sums_[0] = QiPoly(Gauss(n_));
  for (int k = 1; k < static_cast<int>(count); ++k) {
    QiPoly s;
    if (k <= n_) s += f_[n_ - k] * Gauss(k);
    for (int j = 1; j <= std::min(k - 1, n_); ++j) s += f_[n_ - j] * power_sums_[static_cast<size_t>(k - j)];
    power_sums_[static_cast<size_t>(k)] = -s;
  }
}

BiPoly CurveAlgebra::reduce(const BiPoly& g) const {
  if (g.t_degree() < n_) return g;
  std::vector<QiPoly> c = g.tcoeffs();
  for (int k = static_cast<int>(c.size()) - 1; k >= n_; --k) {
    QiPoly lead = c[static_cast<size_t>(k)];
    if (lead.is_zero()) continue;
    for (int j = 0; j < n_; ++j) c[static_cast<size_t>(k - n_ + j)] -= lead * f_[j];
    c[static_cast<size_t>(k)] = QiPoly();
  }
  return BiPoly(std::move(c));
}

FieldElem CurveAlgebra::make(const BiPoly& num, const QiPoly& den) const {
  if (den.is_zero()) fail(ErrorKind::kInvalidArgument, "zero denominator");
  BiPoly r = reduce(num);
  if (r.is_zero()) return FieldElem{};
  QiPoly g = gcd(content(r), den);
  QiPoly d = den;
  if (g.degree() > 0) {
    r = divide_content(r, g);
    d = exact_div(d, g);
  }
  Gauss lc = d.leading();
  if (lc != Gauss(1)) {
    QiPoly inv(lc.inverse());
    r = scale(r, inv);
    d *= lc.inverse();
  }
  return FieldElem{std::move(r), std::move(d)};
}

FieldElem CurveAlgebra::from_ratfunc(const RatFunc& r) const {
  return make(BiPoly::constant(r.num()), r.den());
}

FieldElem CurveAlgebra::t() const { return make(BiPoly::linear(QiPoly())); }

FieldElem CurveAlgebra::add(const FieldElem& a, const FieldElem& b) const {
  if (a.den == b.den) return make(a.num + b.num, a.den);
  return make(scale(a.num, b.den) + scale(b.num, a.den), a.den * b.den);
}

FieldElem CurveAlgebra::sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

FieldElem CurveAlgebra::mul(const FieldElem& a, const FieldElem& b) const {
  return make(a.num * b.num, a.den * b.den);
}

FieldElem CurveAlgebra::conj(const FieldElem& a) const {
  if (!real_) fail(ErrorKind::kInvalidArgument, "conjugation needs f with real coefficients");
  return make(a.num.conj(), a.den.conj());
}

FieldElem CurveAlgebra::inverse(const FieldElem& a) const {
  PolyMatrix m = mult_matrix(a.num);
  QiPoly d = det(m);
  if (d.is_zero()) fail(ErrorKind::kNotInvertible, "element is a zero divisor");
  PolyMatrix adj = adjugate(m);
  // m * v = det * e_0 with v = adj * e_0.
  Column v = adj.column(0);
  for (auto& e : v) e *= a.den;
  return make(BiPoly(v), d);
}

RatFunc CurveAlgebra::trace(const FieldElem& a) const {
  QiPoly s;
  for (int k = 0; k <= a.num.t_degree(); ++k) s += a.num[k] * power_sums_[static_cast<size_t>(k)];
  return RatFunc(s, a.den);
}

PolyMatrix CurveAlgebra::mult_matrix(const BiPoly& g) const {
  const size_t n = static_cast<size_t>(n_);
  PolyMatrix m(n, n);
  BiPoly cur = reduce(g);
  const BiPoly tt = BiPoly::linear(QiPoly());
  for (size_t c = 0; c < n; ++c) {
    m.set_column(c, coords(cur));
    if (c + 1 < n) cur = reduce(cur * tt);
  }
  return m;
}

Column CurveAlgebra::coords(const BiPoly& g) const {
  Column c(static_cast<size_t>(n_));
  BiPoly r = reduce(g);
  for (int k = 0; k <= r.t_degree(); ++k) c[static_cast<size_t>(k)] = r[k];
  return c;
}

}  // namespace specrep
