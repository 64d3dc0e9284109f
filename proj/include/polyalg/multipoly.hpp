#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyalg {

class NotDivisible : public std::invalid_argument {
 public:
  NotDivisible() : std::invalid_argument("polynomial division is not exact") {}
  using std::invalid_argument::invalid_argument;
};

class NotSymmetric : public std::invalid_argument {
 public:
  NotSymmetric() : std::invalid_argument("polynomial is not symmetric in its root variables") {}
  using std::invalid_argument::invalid_argument;
};

class ZeroDerivative : public std::invalid_argument {
 public:
  ZeroDerivative() : std::invalid_argument("derivative vanishes identically") {}
  using std::invalid_argument::invalid_argument;
};

class ZeroLeadingCoefficient : public std::invalid_argument {
 public:
  ZeroLeadingCoefficient() : std::invalid_argument("leading coefficient is zero") {}
  using std::invalid_argument::invalid_argument;
};

// Fixed, ordered variable universe. Every polynomial lives in this ring; a
// variable a polynomial does not use simply has exponent zero everywhere.
inline constexpr int kVarCount = 15;

enum Var : int {
  kVarS = 0,
  kVarT = 1,
  kVarX = 2,
  kVarU = 3,
  kVarBigT = 4,
  kVarBigX = 5,
  kVarZ = 6,
  kVarA1 = 7,
  kVarA2 = 8,
  kVarA3 = 9,
  kVarA4 = 10,
  kVarE1 = 11,
  kVarE2 = 12,
  kVarE3 = 13,
  kVarE4 = 14,
};

const char* var_name(int v);

using Exp = std::array<uint16_t, kVarCount>;

struct Term {
  Exp exp;
  int64_t coeff;
};

// Sparse multivariate polynomial over F_p. Terms are kept sorted in
// descending lexicographic order of exponent vectors and never carry a zero
// coefficient, so equality is syntactic.
class MultiPoly {
 public:
  explicit MultiPoly(int64_t characteristic);
  static MultiPoly constant(int64_t characteristic, int64_t c);
  static MultiPoly variable(int64_t characteristic, Var v, uint16_t exp = 1);
  static MultiPoly from_terms(int64_t characteristic, std::vector<Term> terms);

  int64_t characteristic() const { return p_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  int64_t constant_value() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly scale(int64_t c) const;
  MultiPoly pow(uint32_t k) const;

  int degree(Var v) const;
  int total_degree() const;
  bool uses(Var v) const { return degree(v) > 0; }

  MultiPoly derivative(Var v) const;
  MultiPoly coeff_of(Var v, int k) const;
  MultiPoly leading_coeff_in(Var v) const;
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  MultiPoly transpose_vars(Var v1, Var v2) const;
  int64_t evaluate(const std::array<int64_t, kVarCount>& point) const;

  // Coefficient of the lexicographically leading term.
  int64_t leading_unit() const;
  // Scaled so the lexicographically leading coefficient is 1.
  MultiPoly normalized() const;

  static MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);
  static std::optional<MultiPoly> try_divide(const MultiPoly& a,
                                             const MultiPoly& b);

  std::string str() const;

 private:
  void require_same_char(const MultiPoly& o) const;
  int64_t p_;
  std::vector<Term> terms_;
};

// Gcd in F_p[vars] by primitive polynomial remainder sequences, normalized so
// the lexicographically leading coefficient is 1.
MultiPoly multi_gcd(const MultiPoly& a, const MultiPoly& b);

// Content of a with respect to v: gcd of the coefficients of the powers of v.
MultiPoly content_in(const MultiPoly& a, Var v);

}  // namespace polyalg
