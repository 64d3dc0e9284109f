#pragma once

#include "polyalg/multipoly.hpp"

namespace polyalg {

// Fraction of MultiPoly values over the same prime field, reduced by gcd
// cancellation with the denominator leading coefficient normalized to 1.
// Equality nevertheless compares by cross-multiplication, which stays exact
// even if a caller constructs unreduced values through future code paths.
class RationalFunction {
 public:
  explicit RationalFunction(MultiPoly numerator);
  RationalFunction(MultiPoly numerator, MultiPoly denominator);
  static RationalFunction constant(int64_t characteristic, int64_t c);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  int64_t characteristic() const { return num_.characteristic(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction inverse() const;
  RationalFunction scale(int64_t c) const;
  RationalFunction pow(uint32_t k) const;

  std::string str() const;

 private:
  void reduce();
  MultiPoly num_, den_;
};

}  // namespace polyalg
