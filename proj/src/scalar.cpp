#include "specrep/scalar.hpp"

#include <cctype>

#include "specrep/errors.hpp"

namespace specrep {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                          : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    fail(ErrorKind::kParse, "bad rational '" + std::string(text) + "'");
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) fail(ErrorKind::kParse, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Gauss Gauss::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) fail(ErrorKind::kInvalidArgument, "division by zero in Q(i)");
  return Gauss(re_ / n, -im_ / n);
}

Gauss& Gauss::operator*=(const Gauss& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

bool lex_less(const Gauss& a, const Gauss& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

std::string to_string(const Gauss& z) {
  if (sgn(z.im()) == 0) return z.re().get_str();
  std::string im;
  Rational a = abs(z.im());
  if (a != 1) im = a.get_str();
  im += "i";
  if (sgn(z.re()) == 0) return (sgn(z.im()) < 0 ? "-" : "") + im;
  return z.re().get_str() + (sgn(z.im()) < 0 ? "-" : "+") + im;
}

Gauss parse_gauss(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) fail(ErrorKind::kParse, "empty scalar");
  if (s.back() != 'i') return Gauss(parse_rational(s));
  s.remove_suffix(1);
  // Split at the last sign that is not the leading one.
  size_t split = std::string_view::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view() : s.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? s : s.substr(split);
  Rational im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(im_part);
  }
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return Gauss(re, im);
}

}  // namespace specrep
