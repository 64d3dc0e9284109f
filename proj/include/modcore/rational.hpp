#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace modcore {

// Exact rational with 64-bit parts, always in lowest terms with positive
// denominator. Comparisons cross-multiply in 128-bit so they never round;
// these back the "v(c_i) > (i/n) v(c_n)" style hypothesis checks.
class RationalNumber {
 public:
  RationalNumber() : num_(0), den_(1) {}
  RationalNumber(int64_t numerator, int64_t denominator = 1) {
    if (denominator == 0) throw std::invalid_argument("zero denominator");
    if (denominator < 0) {
      numerator = -numerator;
      denominator = -denominator;
    }
    int64_t g = std::gcd(numerator < 0 ? -numerator : numerator, denominator);
    if (g == 0) g = 1;
    num_ = numerator / g;
    den_ = denominator / g;
  }

  int64_t numerator() const { return num_; }
  int64_t denominator() const { return den_; }

  RationalNumber operator+(const RationalNumber& o) const {
    return RationalNumber(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RationalNumber operator-(const RationalNumber& o) const {
    return RationalNumber(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  RationalNumber operator*(const RationalNumber& o) const {
    return RationalNumber(num_ * o.num_, den_ * o.den_);
  }
  RationalNumber operator-() const { return RationalNumber(-num_, den_); }

  bool operator==(const RationalNumber& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalNumber& o) const { return !(*this == o); }
  bool operator<(const RationalNumber& o) const {
    return static_cast<__int128>(num_) * o.den_ <
           static_cast<__int128>(o.num_) * den_;
  }
  bool operator>(const RationalNumber& o) const { return o < *this; }
  bool operator<=(const RationalNumber& o) const { return !(o < *this); }
  bool operator>=(const RationalNumber& o) const { return !(*this < o); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  int64_t num_;
  int64_t den_;
};

}  // namespace modcore
