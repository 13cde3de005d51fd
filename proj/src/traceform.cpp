#include "specrep/traceform.hpp"

#include "specrep/linalg.hpp"

namespace specrep {

namespace {

PolyMatrix sigma_transpose(const PolyMatrix& m, bool hermitian) {
  return hermitian ? adjoint(m) : m.transpose();
}

PolyMatrix congruence(const PolyMatrix& g, const PolyMatrix& t, bool hermitian) {
  return sigma_transpose(t, hermitian) * g * t;
}

}  // namespace

bool GramForm::integral() const {
  for (size_t r = 0; r < entries.rows(); ++r)
    for (size_t c = 0; c < entries.cols(); ++c)
      if (!entries(r, c).is_polynomial()) return false;
  return true;
}

PolyMatrix GramForm::poly() const {
  if (!integral()) fail(ErrorKind::kInvalidArgument, "Gram matrix has non-polynomial entries");
  return entries.map([](const RatFunc& r) { return r.num(); });
}

GramForm gram_in_basis(const CurveAlgebra& alg, const std::vector<FieldElem>& basis, const FieldElem& c,
                       bool hermitian) {
  const size_t n = basis.size();
  GramForm g;
  g.hermitian = hermitian;
  g.entries = Matrix<RatFunc>(n, n);
  std::vector<FieldElem> left;
  for (const auto& b : basis) left.push_back(hermitian ? alg.conj(b) : b);
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l) g.entries(k, l) = alg.trace(alg.mul(alg.mul(left[k], basis[l]), c));
  return g;
}

GramForm gram_matrix(const IdealLattice& lattice, const FieldElem& c, bool hermitian) {
  return gram_in_basis(lattice.algebra(), lattice.elements(), c, hermitian);
}

bool is_unimodular(const PolyMatrix& g) {
  QiPoly d = det(g);
  return !d.is_zero() && d.degree() == 0;
}

bool is_unimodular(const GramForm& g) { return g.integral() && is_unimodular(g.poly()); }

PolyMatrix hermite_matrix(const CurveAlgebra& alg) {
  const size_t n = static_cast<size_t>(alg.n());
  PolyMatrix h(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) h(i, j) = alg.power_sums()[i + j];
  return h;
}

Diagonalization diagonalize_unimodular(const PolyMatrix& g0, bool hermitian) {
  if (!g0.is_square()) fail(ErrorKind::kInvalidArgument, "Gram matrix must be square");
  if (hermitian ? adjoint(g0) != g0 : g0.transpose() != g0)
    fail(ErrorKind::kInvalidArgument, hermitian ? "form is not Hermitian" : "form is not symmetric");
  if (!is_unimodular(g0)) fail(ErrorKind::kInvalidArgument, "form is not unimodular (det not a nonzero constant)");
  const size_t n = g0.rows();
  PolyMatrix t = PolyMatrix::identity(n, QiPoly(Gauss(1)));
  PolyMatrix g = g0;

  int initial = -1;
  for (int round = 0;; ++round) {
    std::vector<int> d(n);
    int total = 0;
    for (size_t i = 0; i < n; ++i) {
      const QiPoly& gii = g(i, i);
      if (gii.is_zero() || gii.degree() % 2 != 0 || !gii.leading().is_real() || sgn(gii.leading().re()) <= 0)
        fail(ErrorKind::kIndefiniteForm, "diagonal entry is not positive at infinity");
      d[i] = gii.degree() / 2;
      total += d[i];
    }
    if (initial < 0) initial = total;
    if (round > initial + 1) fail(ErrorKind::kNonTermination, "degree reduction did not terminate");
    if (total == 0) break;
    Matrix<Gauss> lead(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (g(i, j).degree() > d[i] + d[j])
          fail(ErrorKind::kIndefiniteForm, "off-diagonal degree exceeds the definite bound");
        lead(i, j) = g(i, j).coeff(d[i] + d[j]);
      }
    auto kernel = nullspace(lead);
    if (kernel.empty()) fail(ErrorKind::kInvalidArgument, "leading form is regular although deg det > 0");
    const auto& w = kernel.front();
    size_t k = n;
    for (size_t j = 0; j < n; ++j)
      if (!w[j].is_zero() && (k == n || d[j] > d[k])) k = j;
    std::vector<QiPoly> coeff(n);
    for (size_t j = 0; j < n; ++j)
      if (!w[j].is_zero()) coeff[j] = QiPoly::monomial(w[j], d[k] - d[j]);
    Column col(n);
    for (size_t j = 0; j < n; ++j)
      if (!coeff[j].is_zero())
        for (size_t r = 0; r < n; ++r) col[r] += coeff[j] * t(r, j);
    t.set_column(k, col);
    g = congruence(g0, t, hermitian);
  }

  // Constant phase: g is a constant definite matrix; LDL by column operations.
  for (size_t k = 0; k < n; ++k) {
    const Gauss pivot = g(k, k).coeff(0);
    if (!pivot.is_real() || sgn(pivot.re()) <= 0) fail(ErrorKind::kIndefiniteForm, "nonpositive pivot");
    for (size_t j = k + 1; j < n; ++j) {
      const Gauss factor = g(k, j).coeff(0) / pivot;
      if (factor.is_zero()) continue;
      for (size_t r = 0; r < n; ++r) t(r, j) -= t(r, k) * factor;
    }
    g = congruence(g0, t, hermitian);
  }
  Diagonalization out;
  out.t = t;
  for (size_t k = 0; k < n; ++k) out.d.push_back(g(k, k).coeff(0).re());
  PolyMatrix expect(n, n);
  for (size_t k = 0; k < n; ++k) expect(k, k) = QiPoly(Gauss(out.d[k]));
  check_internal(g == expect, "diagonalization: congruence is not diagonal");
  check_internal(det(t).degree() == 0, "diagonalization: det T is not a nonzero constant");
  return out;
}

std::vector<RadScalar> constant_cholesky(const std::vector<Rational>& d) {
  std::vector<RadScalar> out;
  for (const auto& v : d) {
    if (sgn(v) <= 0) fail(ErrorKind::kInvalidArgument, "constant_cholesky needs positive entries");
    out.push_back(RadScalar::sqrt(v));
  }
  return out;
}

Signature signature(const Matrix<Rational>& a0) {
  Matrix<Rational> a = a0;
  const size_t n = a.rows();
  Signature s;
  size_t k = 0;
  while (k < n) {
    // Bring a nonzero diagonal entry to position k, or create one.
    size_t p = k;
    while (p < n && sgn(a(p, p)) == 0) ++p;
    if (p == n) {
      size_t i = n, j = n;
      for (size_t r = k; r < n && i == n; ++r)
        for (size_t c = r + 1; c < n; ++c)
          if (sgn(a(r, c)) != 0) {
            i = r;
            j = c;
            break;
          }
      if (i == n) {
        s.zero += static_cast<int>(n - k);
        break;
      }
      // e_i <- e_i + e_j makes the (i, i) entry 2 a_ij != 0.
      for (size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
      for (size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
      p = i;
    }
    if (p != k) {
      for (size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      for (size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, k));
    }
    const Rational pivot = a(k, k);
    (sgn(pivot) > 0 ? s.positive : s.negative) += 1;
    for (size_t r = k + 1; r < n; ++r) {
      const Rational f = a(r, k) / pivot;
      if (sgn(f) == 0) continue;
      for (size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
    for (size_t c = k + 1; c < n; ++c) a(k, c) = 0;
    for (size_t r = k + 1; r < n; ++r) a(r, k) = 0;
    ++k;
  }
  return s;
}

Matrix<Rational> eval_real(const PolyMatrix& g, const Rational& a) {
  return g.map([&](const QiPoly& p) {
    Gauss v = p(Gauss(a));
    if (!v.is_real()) fail(ErrorKind::kInvalidArgument, "matrix is not real");
    return v.re();
  });
}

Matrix<Gauss> eval_at(const PolyMatrix& g, const Gauss& a) {
  return g.map([&](const QiPoly& p) { return p(a); });
}

bool is_positive_definite(const Matrix<Gauss>& a) {
  for (size_t k = 1; k <= a.rows(); ++k) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    Gauss m = det(a.principal_submatrix(idx));
    if (!m.is_real() || sgn(m.re()) <= 0) return false;
  }
  return true;
}

}  // namespace specrep
