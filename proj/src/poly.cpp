#include "specrep/poly.hpp"

namespace specrep {

QiPoly to_gauss(const QPoly& p) {
  std::vector<Gauss> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return QiPoly(std::move(c));
}

QPoly to_rational(const QiPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) {
    if (!v.is_real()) fail(ErrorKind::kInvalidArgument, "polynomial has non-real coefficients");
    c.push_back(v.re());
  }
  return QPoly(std::move(c));
}

std::vector<Integer> primitive_integer_coeffs(const QPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    out.push_back(c.get_num() * (den / c.get_den()));
    g = gcd(g, out.back());
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

}  // namespace specrep
