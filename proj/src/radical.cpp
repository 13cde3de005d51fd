#include "specrep/radical.hpp"

#include <cmath>

namespace specrep {

void square_split(const Integer& n, Integer& s, Integer& r) {
  if (n <= 0) fail(ErrorKind::kInvalidArgument, "square_split needs a positive integer");
  s = 1;
  r = 1;
  Integer rest = n;
  Integer limit;
  mpz_root(limit.get_mpz_t(), n.get_mpz_t(), 3);
  limit += 1;
  if (limit > 1000000) limit = 1000000;
  for (Integer p = 2; p <= limit && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) s *= p;
    if (e % 2 == 1) r *= p;
  }
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    s *= ::sqrt(rest);
  } else {
    r *= rest;
  }
}

RadScalar::RadScalar(Gauss coeff, Integer radicand) : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
  if (radicand_ <= 0) fail(ErrorKind::kInvalidArgument, "radicand must be positive");
  if (coeff_.is_zero()) {
    radicand_ = 1;
    return;
  }
  Integer s, r;
  square_split(radicand_, s, r);
  if (s != 1) coeff_ *= Gauss(Rational(s));
  radicand_ = r;
}

RadScalar RadScalar::sqrt(const Rational& q) {
  if (sgn(q) < 0) fail(ErrorKind::kInvalidArgument, "square root of a negative rational");
  if (sgn(q) == 0) return RadScalar();
  // sqrt(p/d) = sqrt(p*d) / d
  return RadScalar(Gauss(Rational(1, q.get_den())), q.get_num() * q.get_den());
}

std::pair<double, double> RadScalar::to_double() const {
  const double root = std::sqrt(radicand_.get_d());
  return {coeff_.re().get_d() * root, coeff_.im().get_d() * root};
}

RadScalar operator+(const RadScalar& a, const RadScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.radicand_ != b.radicand_) fail(ErrorKind::kInvalidArgument, "adding values with different radicands");
  return RadScalar(a.coeff_ + b.coeff_, a.radicand_);
}

RadScalar operator*(const RadScalar& a, const RadScalar& b) {
  if (a.is_zero() || b.is_zero()) return RadScalar();
  return RadScalar(a.coeff_ * b.coeff_, a.radicand_ * b.radicand_);
}

std::string to_string(const RadScalar& v) {
  if (v.radicand() == 1) return to_string(v.coeff());
  const std::string root = "sqrt(" + v.radicand().get_str() + ")";
  const Gauss& c = v.coeff();
  if (c == Gauss(1)) return root;
  if (c == Gauss(-1)) return "-" + root;
  if (c.is_real()) return c.re().get_str() + "*" + root;
  return "(" + to_string(c) + ")*" + root;
}

}  // namespace specrep
