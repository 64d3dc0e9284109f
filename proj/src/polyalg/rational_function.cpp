#include "polyalg/rational_function.hpp"

namespace polyalg {

RationalFunction::RationalFunction(MultiPoly numerator)
    : num_(std::move(numerator)),
      den_(MultiPoly::constant(num_.characteristic(), 1)) {}

RationalFunction::RationalFunction(MultiPoly numerator, MultiPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero())
    throw std::invalid_argument("rational function with zero denominator");
  reduce();
}

RationalFunction RationalFunction::constant(int64_t characteristic,
                                            int64_t c) {
  return RationalFunction(MultiPoly::constant(characteristic, c));
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(den_.characteristic(), 1);
    return;
  }
  MultiPoly g = multi_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = MultiPoly::exact_divide(num_, g);
    den_ = MultiPoly::exact_divide(den_, g);
  }
  int64_t lead = den_.leading_unit();
  if (lead != 1) {
    MultiPoly inv_lead =
        MultiPoly::exact_divide(MultiPoly::constant(den_.characteristic(), 1),
                                MultiPoly::constant(den_.characteristic(), lead));
    num_ = num_ * inv_lead;
    den_ = den_ * inv_lead;
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::scale(int64_t c) const {
  return RationalFunction(num_.scale(c), den_);
}

RationalFunction RationalFunction::pow(uint32_t k) const {
  return RationalFunction(num_.pow(k), den_.pow(k));
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace polyalg
