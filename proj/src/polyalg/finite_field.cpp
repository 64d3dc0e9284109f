#include "polyalg/finite_field.hpp"

#include <sstream>

#include "modcore/residue.hpp"

namespace polyalg {
namespace {

int64_t floormod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Value of the monic polynomial with the given ascending coefficients at x.
int64_t eval_mod(const std::vector<int64_t>& coeffs, int64_t x, int64_t p) {
  int64_t acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    acc = floormod(acc * x + coeffs[i], p);
  }
  return acc;
}

}  // namespace

FiniteField::FiniteField(int64_t p) : p_(p), k_(1), modulus_{0, 1} {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
}

FiniteField::FiniteField(int64_t p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1 || k > 3) throw std::invalid_argument("extension degree must be 1, 2, or 3");
  if (k == 1) {
    modulus_ = {0, 1};
    return;
  }
  // First monic irreducible of degree k in the element_at ordering of the
  // lower coefficients.  Degree 2 and 3 polynomials are irreducible exactly
  // when they have no root, so the scan below is a complete test.
  uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<uint64_t>(p);
  for (uint64_t idx = 0; idx < count; ++idx) {
    std::vector<int64_t> cand(static_cast<size_t>(k) + 1, 0);
    uint64_t rest = idx;
    for (int i = 0; i < k; ++i) {
      cand[static_cast<size_t>(i)] = static_cast<int64_t>(rest % static_cast<uint64_t>(p));
      rest /= static_cast<uint64_t>(p);
    }
    cand[static_cast<size_t>(k)] = 1;
    bool has_root = false;
    for (int64_t x = 0; x < p; ++x) {
      if (eval_mod(cand, x, p) == 0) {
        has_root = true;
        break;
      }
    }
    if (!has_root) {
      modulus_ = cand;
      return;
    }
  }
  throw std::logic_error("no irreducible modulus found");
}

FiniteField::FiniteField(int64_t p, int k, std::vector<int64_t> modulus_coeffs)
    : p_(p), k_(k), modulus_(std::move(modulus_coeffs)) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1 || k > 3) throw std::invalid_argument("extension degree must be 1, 2, or 3");
  if (modulus_.size() != static_cast<size_t>(k) + 1) {
    throw std::invalid_argument("modulus must have degree equal to the extension degree");
  }
  for (int64_t& c : modulus_) c = floormod(c, p);
  if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
  verify_irreducible();
}

void FiniteField::verify_irreducible() const {
  if (k_ == 1) return;
  for (int64_t x = 0; x < p_; ++x) {
    if (eval_mod(modulus_, x, p_) == 0) {
      throw std::invalid_argument("modulus has a root, so it is not irreducible");
    }
  }
}

uint64_t FiniteField::order() const {
  uint64_t n = 1;
  for (int i = 0; i < k_; ++i) n *= static_cast<uint64_t>(p_);
  return n;
}

FFElem FiniteField::zero() const { return FFElem(this, {0, 0, 0}); }

FFElem FiniteField::one() const { return FFElem(this, {1, 0, 0}); }

FFElem FiniteField::element(int64_t c) const { return FFElem(this, {floormod(c, p_), 0, 0}); }

FFElem FiniteField::generator() const {
  if (k_ == 1) throw std::invalid_argument("prime field has no extension generator");
  return FFElem(this, {0, 1, 0});
}

FFElem FiniteField::from_coeffs(std::array<int64_t, 3> coeffs) const {
  for (int i = k_; i < 3; ++i) {
    if (floormod(coeffs[static_cast<size_t>(i)], p_) != 0) {
      throw std::invalid_argument("coefficient beyond the extension degree");
    }
  }
  return FFElem(this, coeffs);
}

FFElem FiniteField::element_at(uint64_t index) const {
  if (index >= order()) throw std::invalid_argument("element index out of range");
  std::array<int64_t, 3> c = {0, 0, 0};
  for (int i = 0; i < k_; ++i) {
    c[static_cast<size_t>(i)] = static_cast<int64_t>(index % static_cast<uint64_t>(p_));
    index /= static_cast<uint64_t>(p_);
  }
  return FFElem(this, c);
}

std::string FiniteField::str() const {
  std::ostringstream out;
  out << "F_" << p_;
  if (k_ > 1) out << "^" << k_;
  return out.str();
}

FFElem::FFElem(const FiniteField* field, std::array<int64_t, 3> coeffs) : field_(field), c_{} {
  if (field_ == nullptr) throw std::invalid_argument("field element needs a field");
  for (int i = 0; i < 3; ++i) {
    c_[static_cast<size_t>(i)] = floormod(coeffs[static_cast<size_t>(i)], field_->p());
  }
  for (int i = field_->degree(); i < 3; ++i) {
    if (c_[static_cast<size_t>(i)] != 0) {
      throw std::invalid_argument("coefficient beyond the extension degree");
    }
  }
}

void FFElem::require_same_field(const FFElem& o) const {
  if (field_ == nullptr || o.field_ == nullptr) {
    throw std::invalid_argument("uninitialized field element");
  }
  if (field_ == o.field_) return;
  if (field_->p() != o.field_->p() || field_->degree() != o.field_->degree() ||
      field_->modulus() != o.field_->modulus()) {
    throw std::invalid_argument("elements of different fields");
  }
}

FFElem FFElem::operator+(const FFElem& o) const {
  require_same_field(o);
  return FFElem(field_, {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]});
}

FFElem FFElem::operator-(const FFElem& o) const {
  require_same_field(o);
  return FFElem(field_, {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2]});
}

FFElem FFElem::operator-() const {
  if (field_ == nullptr) throw std::invalid_argument("uninitialized field element");
  return FFElem(field_, {-c_[0], -c_[1], -c_[2]});
}

FFElem FFElem::operator*(const FFElem& o) const {
  require_same_field(o);
  int64_t p = field_->p();
  int k = field_->degree();
  std::array<int64_t, 5> prod = {0, 0, 0, 0, 0};
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      size_t ij = static_cast<size_t>(i + j);
      prod[ij] = floormod(prod[ij] + c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)], p);
    }
  }
  const std::vector<int64_t>& m = field_->modulus();
  for (int d = 2 * (k - 1); d >= k; --d) {
    int64_t lead = prod[static_cast<size_t>(d)];
    if (lead == 0) continue;
    prod[static_cast<size_t>(d)] = 0;
    for (int i = 0; i < k; ++i) {
      size_t at = static_cast<size_t>(d - k + i);
      prod[at] = floormod(prod[at] - lead * m[static_cast<size_t>(i)], p);
    }
  }
  return FFElem(field_, {prod[0], prod[1], prod[2]});
}

FFElem FFElem::pow(uint64_t e) const {
  if (field_ == nullptr) throw std::invalid_argument("uninitialized field element");
  FFElem acc = field_->one();
  FFElem base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FFElem FFElem::inverse() const {
  if (field_ == nullptr) throw std::invalid_argument("uninitialized field element");
  if (is_zero()) throw modcore::NotAUnit();
  return pow(field_->order() - 2);
}

FFElem FFElem::operator/(const FFElem& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

bool FFElem::operator==(const FFElem& o) const {
  require_same_field(o);
  return c_ == o.c_;
}

std::string FFElem::str() const {
  if (field_ == nullptr) return "(uninitialized)";
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 2; i >= 0; --i) {
    int64_t c = c_[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!first) out << " + ";
    if (i == 0) {
      out << c;
    } else {
      if (c != 1) out << c << "*";
      out << "g";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

SpecialConstants find_special_constants(const FiniteField& F) {
  SpecialConstants sc;
  FFElem one = F.one();
  FFElem three = F.element(3);
  for (uint64_t idx = 0; idx < F.order(); ++idx) {
    FFElem x = F.element_at(idx);
    if (!sc.has_omega && x != one && x * x * x == one) {
      sc.has_omega = true;
      sc.omega = x;
    }
    if (!sc.has_sqrt3 && x * x == three) {
      sc.has_sqrt3 = true;
      sc.sqrt3 = x;
    }
    if (sc.has_omega && sc.has_sqrt3) break;
  }
  return sc;
}

}  // namespace polyalg
