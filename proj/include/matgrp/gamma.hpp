#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "matgrp/mat2.hpp"

namespace matgrp {

struct DivisibilityViolated : std::invalid_argument {
  DivisibilityViolated() : std::invalid_argument("l must divide N") {}
};

struct NotInSubgroup : std::invalid_argument {
  NotInSubgroup() : std::invalid_argument("matrix is not in S(Nl, N)") {}
};

// 3x3 matrix over F_l, l prime.
class Mat3Mod {
 public:
  Mat3Mod(const std::array<int64_t, 9>& entries, int64_t l) : l_(l) {
    if (l < 2) throw std::invalid_argument("modulus must be a prime >= 2");
    for (int i = 0; i < 9; ++i) e_[i] = norm(entries[i]);
  }

  static Mat3Mod identity(int64_t l) {
    return Mat3Mod({1, 0, 0, 0, 1, 0, 0, 0, 1}, l);
  }

  int64_t modulus() const { return l_; }
  int64_t entry(int row, int col) const { return e_[row * 3 + col]; }

  Mat3Mod operator*(const Mat3Mod& o) const {
    if (l_ != o.l_) throw modcore::ModulusMismatch();
    std::array<int64_t, 9> r{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        int64_t acc = 0;
        for (int k = 0; k < 3; ++k) acc += e_[i * 3 + k] * o.e_[k * 3 + j];
        r[i * 3 + j] = acc;
      }
    }
    return Mat3Mod(r, l_);
  }

  bool operator==(const Mat3Mod& o) const { return l_ == o.l_ && e_ == o.e_; }
  bool operator!=(const Mat3Mod& o) const { return !(*this == o); }

  std::array<int64_t, 3> apply(const std::array<int64_t, 3>& v) const {
    std::array<int64_t, 3> r{};
    for (int i = 0; i < 3; ++i) {
      int64_t acc = 0;
      for (int k = 0; k < 3; ++k) acc += e_[i * 3 + k] * v[k];
      r[i] = norm(acc);
    }
    return r;
  }

  int64_t det() const;

  // Coefficients of det(T*I - M), ascending: index k holds the T^k coefficient.
  std::array<int64_t, 4> char_poly() const;

  // Degree of the minimal polynomial, found as the first linear dependence
  // among I, M, M^2, M^3 over F_l.
  int minimal_poly_degree() const;

  uint64_t key() const {
    uint64_t acc = 0;
    for (int i = 0; i < 9; ++i) acc = acc * static_cast<uint64_t>(l_) + static_cast<uint64_t>(e_[i]);
    return acc;
  }

  std::string str() const;

 private:
  int64_t norm(int64_t v) const {
    int64_t r = v % l_;
    return r < 0 ? r + l_ : r;
  }

  std::array<int64_t, 9> e_;
  int64_t l_;
};

// gamma(x,y,z) = I + N*(x y; z -x) mod Nl, landing in S(Nl, N); needs l | N.
Mat2Mod gamma_map(int64_t x, int64_t y, int64_t z, int64_t N, int64_t l);

// Inverts gamma on S(Nl, N): x = (X11 - 1)/N mod l, y = X12/N, z = X21/N,
// then re-applies gamma to confirm membership.
std::array<int64_t, 3> gamma_inverse(const Mat2Mod& X, int64_t N, int64_t l);

// The conjugation action A gamma(v) A^{-1} = gamma(f(A) v) as a 3x3 matrix
// over F_l, built column-wise from the basis vectors.
Mat3Mod conj_rep(const Mat2Mod& A, int64_t N, int64_t l);

// Plane n.x = 0 in F_l^3, covector normalized so its first nonzero entry is 1.
struct PlaneFl {
  std::array<int64_t, 3> normal;
  int64_t l;

  bool operator==(const PlaneFl& o) const {
    return l == o.l && normal == o.normal;
  }
  std::string str() const;
};

// All l^2 + l + 1 planes of F_l^3.
std::vector<PlaneFl> all_planes(int64_t l);

bool plane_invariant(const Mat3Mod& M, const PlaneFl& P);

// Planes carried into themselves by every matrix in the list.
std::vector<PlaneFl> invariant_planes(const std::vector<Mat3Mod>& Ms, int64_t l);

}  // namespace matgrp
