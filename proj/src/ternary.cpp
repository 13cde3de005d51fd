#include "specrep/ternary.hpp"

namespace specrep {

Rational eval_form(const MPoly& form, const Direction& e) {
  Gauss v = form.eval({Gauss(e[0]), Gauss(e[1]), Gauss(e[2]), Gauss(0)});
  if (!v.is_real()) fail(ErrorKind::kInvalidArgument, "form must have rational coefficients");
  return v.re();
}

MPoly linear_substitute(const MPoly& p, const Matrix<Rational>& a) {
  std::array<MPoly, 4> images{MPoly(), MPoly(), MPoly(), MPoly::var(kT)};
  const Var vars[3] = {kX, kY, kZ};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      if (sgn(a(i, j)) != 0) images[i] += Gauss(a(i, j)) * MPoly::var(vars[j]);
  return p.substitute(images);
}

Normalization normalize_direction(const MPoly& form, const Direction& e) {
  if (form.uses(kT)) fail(ErrorKind::kInvalidArgument, "a ternary form uses x, y, z only");
  if (!form.is_real()) fail(ErrorKind::kInvalidArgument, "form must have rational coefficients");
  if (form.is_zero() || !form.is_homogeneous()) fail(ErrorKind::kInvalidArgument, "form is not homogeneous");
  Normalization nz;
  nz.form = form;
  nz.e = e;
  nz.fe = eval_form(form, e);
  if (sgn(nz.fe) == 0) fail(ErrorKind::kInvalidArgument, "F(e) = 0: e is not a hyperbolicity direction");
  // U^{-1} has columns (standard vectors, e); the omitted standard vector is
  // the last one where e is nonzero, so e = (0, 0, 1) gives U = I.
  size_t p = 3;
  for (size_t k = 3; k-- > 0;)
    if (sgn(e[k]) != 0) {
      p = k;
      break;
    }
  nz.u_inv = Matrix<Rational>(3, 3);
  size_t col = 0;
  for (size_t k = 0; k < 3; ++k) {
    if (k == p) continue;
    nz.u_inv(k, col++) = 1;
  }
  for (size_t k = 0; k < 3; ++k) nz.u_inv(k, 2) = e[k];
  // Inverse of the rational 3x3 matrix via the adjugate.
  Rational d = det(nz.u_inv);
  nz.u = adjugate(nz.u_inv);
  for (size_t r = 0; r < 3; ++r)
    for (size_t c = 0; c < 3; ++c) nz.u(r, c) /= d;
  nz.normalized = Gauss(Rational(1) / nz.fe) * linear_substitute(form, nz.u_inv);
  return nz;
}

BiPoly dehomogenize(const MPoly& normalized) {
  std::array<MPoly, 4> images{MPoly::var(kX), MPoly(1), MPoly::var(kT), MPoly()};
  BiPoly f = normalized.substitute(images).to_bipoly();
  if (!f.is_monic()) fail(ErrorKind::kInternalCheckFailed, "dehomogenized form is not monic in t");
  return f;
}

}  // namespace specrep
