#include "specrep/ratfunc.hpp"

namespace specrep {

RatFunc::RatFunc(QiPoly num, QiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::kInvalidArgument, "rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = QiPoly(Gauss(1));
    return;
  }
  QiPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  Gauss lc = den_.leading();
  if (lc != Gauss(1)) {
    Gauss inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) fail(ErrorKind::kInvalidArgument, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

}  // namespace specrep
