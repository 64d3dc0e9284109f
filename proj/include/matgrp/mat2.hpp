#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "modcore/residue.hpp"

namespace matgrp {

struct NotADivisor : std::invalid_argument {
  NotADivisor() : std::invalid_argument("expected a divisor of the larger modulus") {}
};

// 2x2 matrix over Z/MZ with canonical entries. Desk-scale moduli only; entry
// packing gives each matrix a unique 64-bit key used by the set-based groups.
class Mat2Mod {
 public:
  Mat2Mod(int64_t a, int64_t b, int64_t c, int64_t d, int64_t modulus)
      : m_(modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    a_ = norm(a);
    b_ = norm(b);
    c_ = norm(c);
    d_ = norm(d);
  }

  static Mat2Mod identity(int64_t modulus) {
    return Mat2Mod(1, 0, 0, 1, modulus);
  }

  int64_t a() const { return a_; }
  int64_t b() const { return b_; }
  int64_t c() const { return c_; }
  int64_t d() const { return d_; }
  int64_t modulus() const { return m_; }

  Mat2Mod operator*(const Mat2Mod& o) const {
    if (m_ != o.m_) throw modcore::ModulusMismatch();
    return Mat2Mod(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                   c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_, m_);
  }

  int64_t det() const { return norm(a_ * d_ - b_ * c_); }
  int64_t trace() const { return norm(a_ + d_); }

  // Adjugate scaled by det^{-1}; throws NotAUnit through ResidueInt when the
  // determinant is not invertible.
  Mat2Mod inverse() const {
    modcore::ResidueInt dinv = modcore::ResidueInt(det(), m_).inverse();
    int64_t u = dinv.value();
    return Mat2Mod(d_ * u, -b_ * u, -c_ * u, a_ * u, m_);
  }

  // Entrywise reduction to a divisor modulus.
  Mat2Mod reduce(int64_t n) const {
    if (n < 1 || m_ % n != 0) throw NotADivisor();
    return Mat2Mod(a_, b_, c_, d_, n);
  }

  bool is_identity() const {
    return *this == identity(m_);
  }

  bool operator==(const Mat2Mod& o) const {
    return m_ == o.m_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }
  bool operator!=(const Mat2Mod& o) const { return !(*this == o); }

  uint64_t key() const {
    uint64_t m = static_cast<uint64_t>(m_);
    return ((static_cast<uint64_t>(a_) * m + static_cast<uint64_t>(b_)) * m +
            static_cast<uint64_t>(c_)) *
               m +
           static_cast<uint64_t>(d_);
  }

  std::string str() const {
    return "(" + std::to_string(a_) + " " + std::to_string(b_) + "; " +
           std::to_string(c_) + " " + std::to_string(d_) + ") mod " +
           std::to_string(m_);
  }

 private:
  int64_t norm(int64_t v) const {
    int64_t r = v % m_;
    return r < 0 ? r + m_ : r;
  }

  int64_t a_, b_, c_, d_, m_;
};

}  // namespace matgrp
