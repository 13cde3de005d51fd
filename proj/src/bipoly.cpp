#include "specrep/bipoly.hpp"

#include <algorithm>

namespace specrep {

BiPoly::BiPoly(std::vector<QiPoly> tcoeffs) : c_(std::move(tcoeffs)) { trim(); }

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::from_rational(const std::vector<QPoly>& tcoeffs) {
  std::vector<QiPoly> c;
  for (const auto& p : tcoeffs) c.push_back(to_gauss(p));
  return BiPoly(std::move(c));
}

BiPoly BiPoly::linear(const QiPoly& p) { return BiPoly({-p, QiPoly(Gauss(1))}); }

bool BiPoly::is_monic() const {
  return !c_.empty() && c_.back() == QiPoly(Gauss(1));
}

bool BiPoly::is_real() const {
  return std::all_of(c_.begin(), c_.end(), [](const QiPoly& p) { return p.is_real(); });
}

int BiPoly::x_degree() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) d = std::max(d, c_[k].degree() + static_cast<int>(k));
  return d;
}

BiPoly BiPoly::dt() const {
  std::vector<QiPoly> d;
  for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Gauss(static_cast<long>(k)));
  return BiPoly(std::move(d));
}

BiPoly BiPoly::dx() const {
  std::vector<QiPoly> d;
  for (const auto& p : c_) d.push_back(p.derivative());
  return BiPoly(std::move(d));
}

BiPoly BiPoly::conj() const {
  std::vector<QiPoly> d;
  for (const auto& p : c_) d.push_back(p.conj());
  return BiPoly(std::move(d));
}

QiPoly BiPoly::at_x(const Gauss& a) const {
  std::vector<Gauss> c;
  for (const auto& p : c_) c.push_back(p(a));
  return QiPoly(std::move(c));
}

Gauss BiPoly::eval(const Gauss& a, const Gauss& t) const { return at_x(a)(t); }

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  std::vector<QiPoly> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return BiPoly(std::move(c));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  std::vector<QiPoly> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
  return BiPoly(std::move(c));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<QiPoly> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return BiPoly(std::move(c));
}

std::vector<QPoly> rational_tcoeffs(const BiPoly& f) {
  std::vector<QPoly> out;
  for (const auto& p : f.tcoeffs()) out.push_back(to_rational(p));
  return out;
}

QiPoly resultant_t(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) fail(ErrorKind::kInvalidArgument, "resultant of zero polynomial");
  const int m = f.t_degree(), k = g.t_degree();
  const size_t size = static_cast<size_t>(m + k);
  if (size == 0) return QiPoly(Gauss(1));
  Matrix<QiPoly> s(size, size);
  for (int r = 0; r < k; ++r)
    for (int j = 0; j <= m; ++j) s(static_cast<size_t>(r), static_cast<size_t>(r + j)) = f[m - j];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= k; ++j)
      s(static_cast<size_t>(k + r), static_cast<size_t>(r + j)) = g[k - j];
  return det(s);
}

QiPoly discriminant_t(const BiPoly& f) { return resultant_t(f, f.dt()); }

BiPoly charpoly(const Matrix<QiPoly>& m) { return BiPoly(charpoly_coeffs(m)); }

BiPoly charpoly(const Matrix<QPoly>& m) { return BiPoly::from_rational(charpoly_coeffs(m)); }

}  // namespace specrep
