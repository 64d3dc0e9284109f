#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace modcore {

struct ModulusMismatch : std::invalid_argument {
  ModulusMismatch() : std::invalid_argument("operands carry different moduli") {}
};

struct NonCoprimeModuli : std::invalid_argument {
  NonCoprimeModuli() : std::invalid_argument("moduli are not pairwise coprime") {}
};

struct EmptyInput : std::invalid_argument {
  EmptyInput() : std::invalid_argument("empty input list") {}
};

struct NotAUnit : std::invalid_argument {
  NotAUnit() : std::invalid_argument("element is not a unit in its modulus") {}
};

// Canonical residue in Z/mZ: value always in [0, m). Arithmetic is closed over
// one fixed modulus; mixing moduli throws. The modulus-1 ring has the single
// element 0, which counts as the unit so degenerate parameters flow through.
class ResidueInt {
 public:
  ResidueInt(int64_t value, int64_t modulus);

  int64_t value() const { return value_; }
  int64_t modulus() const { return modulus_; }

  ResidueInt operator+(const ResidueInt& o) const;
  ResidueInt operator-(const ResidueInt& o) const;
  ResidueInt operator*(const ResidueInt& o) const;
  ResidueInt operator-() const;

  bool operator==(const ResidueInt& o) const {
    return modulus_ == o.modulus_ && value_ == o.value_;
  }
  bool operator!=(const ResidueInt& o) const { return !(*this == o); }

  bool is_unit() const;
  ResidueInt inverse() const;  // NotAUnit when gcd(value, modulus) > 1
  ResidueInt pow(uint64_t e) const;

 private:
  int64_t value_;
  int64_t modulus_;
};

// Combines pairwise-coprime residues into one residue mod the product.
ResidueInt crt_combine(const std::vector<ResidueInt>& parts);

// All residues coprime to the modulus, ascending; unit_group(1) = {0}.
std::vector<ResidueInt> unit_group(int64_t modulus);

ResidueInt inverse_mod(const ResidueInt& a);

// Euler phi by direct scan; small moduli only.
int64_t unit_count(int64_t modulus);

}  // namespace modcore
