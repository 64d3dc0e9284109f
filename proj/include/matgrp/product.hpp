#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matgrp/closure.hpp"
#include "matgrp/mat2.hpp"
#include "modcore/residue.hpp"

namespace matgrp {

// Element of (Z/mZ)^x X SL2(Z/MZ).
class ProductElem {
 public:
  ProductElem(modcore::ResidueInt unit, Mat2Mod matrix)
      : unit_(unit), matrix_(matrix) {
    if (!unit_.is_unit()) throw modcore::NotAUnit();
    int64_t one = matrix_.modulus() == 1 ? 0 : 1;
    if (matrix_.det() != one) {
      throw std::invalid_argument("matrix component must have det 1");
    }
  }

  static ProductElem identity(int64_t m, int64_t M) {
    return ProductElem(modcore::ResidueInt(m == 1 ? 0 : 1, m),
                       Mat2Mod::identity(M));
  }

  const modcore::ResidueInt& unit() const { return unit_; }
  const Mat2Mod& matrix() const { return matrix_; }

  ProductElem operator*(const ProductElem& o) const {
    return ProductElem(unit_ * o.unit_, matrix_ * o.matrix_);
  }

  bool operator==(const ProductElem& o) const {
    return unit_ == o.unit_ && matrix_ == o.matrix_;
  }
  bool operator!=(const ProductElem& o) const { return !(*this == o); }

  uint64_t key() const {
    return static_cast<uint64_t>(unit_.value()) +
           static_cast<uint64_t>(unit_.modulus()) * matrix_.key();
  }

  std::string str() const {
    return "(" + std::to_string(unit_.value()) + ", " + matrix_.str() + ")";
  }

 private:
  modcore::ResidueInt unit_;
  Mat2Mod matrix_;
};

struct MembershipVerdict {
  ProductElem element;
  bool present;
};

struct ProductClosureReport {
  size_t order = 0;
  bool unit_projection_surjective = false;
  bool matrix_projection_surjective = false;
  std::vector<MembershipVerdict> memberships;
  std::vector<ProductElem> closure;  // sorted by key
};

// Closure of the generators inside (Z/mZ)^x X SL2(Z/MZ) with projection
// surjectivity and membership verdicts for the queried elements.
ProductClosureReport product_closure_report(
    int64_t m, int64_t M, const std::vector<ProductElem>& generators,
    const std::vector<ProductElem>& queries,
    size_t bound = kDefaultClosureBound);

}  // namespace matgrp
