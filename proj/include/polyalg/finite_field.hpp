#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyalg {

class FiniteField;

// Element of F_{p^k}, k <= 3, as a polynomial of degree < k in the generator.
// Holds a pointer to its field; the field must outlive its elements.
class FFElem {
 public:
  FFElem() : field_(nullptr), c_{} {}
  FFElem(const FiniteField* field, std::array<int64_t, 3> coeffs);

  const FiniteField* field() const { return field_; }
  const std::array<int64_t, 3>& coeffs() const { return c_; }
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

  FFElem operator+(const FFElem& o) const;
  FFElem operator-(const FFElem& o) const;
  FFElem operator*(const FFElem& o) const;
  FFElem operator/(const FFElem& o) const;
  FFElem operator-() const;
  bool operator==(const FFElem& o) const;
  bool operator!=(const FFElem& o) const { return !(*this == o); }

  FFElem inverse() const;
  FFElem pow(uint64_t e) const;

  std::string str() const;

 private:
  void require_same_field(const FFElem& o) const;
  const FiniteField* field_;
  std::array<int64_t, 3> c_;
};

// F_{p^k} for prime p and k <= 3, with a monic modulus polynomial verified
// irreducible by exhaustive root search (sufficient for degree 2 and 3).
class FiniteField {
 public:
  explicit FiniteField(int64_t p);
  FiniteField(int64_t p, int k);
  FiniteField(int64_t p, int k, std::vector<int64_t> modulus_coeffs);

  int64_t p() const { return p_; }
  int degree() const { return k_; }
  uint64_t order() const;
  // Ascending coefficients of the monic modulus, length k+1.
  const std::vector<int64_t>& modulus() const { return modulus_; }

  FFElem zero() const;
  FFElem one() const;
  FFElem element(int64_t c) const;
  FFElem generator() const;
  FFElem from_coeffs(std::array<int64_t, 3> coeffs) const;
  FFElem element_at(uint64_t index) const;

  std::string str() const;

 private:
  void verify_irreducible() const;
  int64_t p_;
  int k_;
  std::vector<int64_t> modulus_;
};

struct SpecialConstants {
  bool has_omega = false;
  FFElem omega;
  bool has_sqrt3 = false;
  FFElem sqrt3;
};

// Scans the field in element_at order for a primitive cube root of unity and
// for a square root of 3; absence is reported through the flags.
SpecialConstants find_special_constants(const FiniteField& F);

}  // namespace polyalg
