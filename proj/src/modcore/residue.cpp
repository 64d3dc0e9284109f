#include "modcore/residue.hpp"

#include <numeric>

namespace modcore {

namespace {

int64_t floormod(int64_t v, int64_t m) {
  int64_t r = v % m;
  return r < 0 ? r + m : r;
}

int64_t mulmod(int64_t a, int64_t b, int64_t m) {
  return static_cast<int64_t>(static_cast<__int128>(a) * b % m);
}

}  // namespace

ResidueInt::ResidueInt(int64_t value, int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  modulus_ = modulus;
  value_ = floormod(value, modulus);
}

ResidueInt ResidueInt::operator+(const ResidueInt& o) const {
  if (modulus_ != o.modulus_) throw ModulusMismatch();
  return ResidueInt(value_ + o.value_, modulus_);
}

ResidueInt ResidueInt::operator-(const ResidueInt& o) const {
  if (modulus_ != o.modulus_) throw ModulusMismatch();
  return ResidueInt(value_ - o.value_, modulus_);
}

ResidueInt ResidueInt::operator*(const ResidueInt& o) const {
  if (modulus_ != o.modulus_) throw ModulusMismatch();
  return ResidueInt(mulmod(value_, o.value_, modulus_), modulus_);
}

ResidueInt ResidueInt::operator-() const {
  return ResidueInt(-value_, modulus_);
}

bool ResidueInt::is_unit() const {
  if (modulus_ == 1) return true;
  return std::gcd(value_, modulus_) == 1;
}

ResidueInt ResidueInt::inverse() const {
  if (!is_unit()) throw NotAUnit();
  if (modulus_ == 1) return *this;
  // Extended Euclid on (value, modulus).
  int64_t r0 = value_, r1 = modulus_;
  int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    int64_t r2 = r0 - q * r1;
    int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return ResidueInt(s0, modulus_);
}

ResidueInt ResidueInt::pow(uint64_t e) const {
  ResidueInt acc(modulus_ == 1 ? 0 : 1, modulus_);
  ResidueInt base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

ResidueInt crt_combine(const std::vector<ResidueInt>& parts) {
  if (parts.empty()) throw EmptyInput();
  ResidueInt acc = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) {
    const ResidueInt& nxt = parts[i];
    int64_t m = acc.modulus(), n = nxt.modulus();
    if (std::gcd(m, n) != 1) throw NonCoprimeModuli();
    // x = acc + m * ((nxt - acc) * m^{-1} mod n)
    ResidueInt diff(nxt.value() - acc.value(), n);
    ResidueInt minv = ResidueInt(m, n).inverse();
    int64_t lift = (diff * minv).value();
    acc = ResidueInt(acc.value() + m * lift, m * n);
  }
  return acc;
}

std::vector<ResidueInt> unit_group(int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  std::vector<ResidueInt> units;
  if (modulus == 1) {
    units.emplace_back(0, 1);
    return units;
  }
  for (int64_t v = 0; v < modulus; ++v) {
    if (std::gcd(v, modulus) == 1) units.emplace_back(v, modulus);
  }
  return units;
}

ResidueInt inverse_mod(const ResidueInt& a) { return a.inverse(); }

int64_t unit_count(int64_t modulus) {
  return static_cast<int64_t>(unit_group(modulus).size());
}

}  // namespace modcore
