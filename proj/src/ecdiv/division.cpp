#include "ecdiv/division.hpp"

namespace ecdiv {
namespace {

using polyalg::MultiPoly;

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

constexpr int kIndexCap = 50;

void check_inputs(int64_t p, int m_max) {
  if (!is_prime(p) || p < 5) throw std::invalid_argument("characteristic must be a prime >= 5");
  if (m_max < 1) throw std::invalid_argument("at least psi_1 must be requested");
  if (m_max > kIndexCap) throw BoundExceeded();
}

MultiPoly curve_rhs(int64_t p) {
  MultiPoly x = MultiPoly::variable(p, polyalg::kVarX);
  MultiPoly s = MultiPoly::variable(p, polyalg::kVarS);
  MultiPoly t = MultiPoly::variable(p, polyalg::kVarT);
  return x.pow(3) + s * x + t;
}

MultiPoly psi3_seed(int64_t p) {
  MultiPoly x = MultiPoly::variable(p, polyalg::kVarX);
  MultiPoly s = MultiPoly::variable(p, polyalg::kVarS);
  MultiPoly t = MultiPoly::variable(p, polyalg::kVarT);
  return MultiPoly::constant(p, 3) * x.pow(4) + MultiPoly::constant(p, 6) * s * x.pow(2) +
         MultiPoly::constant(p, 12) * t * x - s * s;
}

MultiPoly psi4_seed(int64_t p) {
  MultiPoly x = MultiPoly::variable(p, polyalg::kVarX);
  MultiPoly s = MultiPoly::variable(p, polyalg::kVarS);
  MultiPoly t = MultiPoly::variable(p, polyalg::kVarT);
  MultiPoly inner = x.pow(6) + MultiPoly::constant(p, 5) * s * x.pow(4) +
                    MultiPoly::constant(p, 20) * t * x.pow(3) -
                    MultiPoly::constant(p, 5) * s * s * x * x -
                    MultiPoly::constant(p, 4) * s * t * x -
                    MultiPoly::constant(p, 8) * t * t - s.pow(3);
  return MultiPoly::constant(p, 4) * inner;
}

int64_t inverse_of_two(int64_t p) { return (p + 1) / 2; }

}  // namespace

DivisionPolySet::DivisionPolySet(int64_t p, std::vector<MultiPoly> x_parts)
    : p_(p), x_parts_(std::move(x_parts)) {}

DivisionPoly DivisionPolySet::psi(int m) const { return {x_part(m), m % 2 == 0}; }

const MultiPoly& DivisionPolySet::x_part(int m) const {
  if (m < 0 || m >= static_cast<int>(x_parts_.size())) {
    throw std::invalid_argument("division polynomial index out of range");
  }
  return x_parts_[static_cast<size_t>(m)];
}

DivisionPolySet division_polynomials(int64_t p, int m_max) {
  check_inputs(p, m_max);
  MultiPoly E = curve_rhs(p);
  MultiPoly E2 = E * E;
  int top = std::max(m_max, 4);
  std::vector<MultiPoly> q;
  q.reserve(static_cast<size_t>(top) + 1);
  q.push_back(MultiPoly(p));
  q.push_back(MultiPoly::constant(p, 1));
  q.push_back(MultiPoly::constant(p, 2));
  q.push_back(psi3_seed(p));
  q.push_back(psi4_seed(p));
  for (int n = 5; n <= top; ++n) {
    size_t m = static_cast<size_t>(n / 2);
    if (n % 2 == 1) {
      // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3 with the y^2
      // from whichever side carries the even indices replaced by E.
      MultiPoly lhs = q[m + 2] * q[m].pow(3);
      MultiPoly rhs = q[m - 1] * q[m + 1].pow(3);
      if (m % 2 == 0) {
        q.push_back(lhs * E2 - rhs);
      } else {
        q.push_back(lhs - rhs * E2);
      }
    } else {
      // psi_{2m} = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / 2y;
      // in x-parts the y bookkeeping cancels for both parities of m.
      MultiPoly inner = q[m + 2] * q[m - 1] * q[m - 1] - q[m - 2] * q[m + 1] * q[m + 1];
      q.push_back((q[m] * inner).scale(inverse_of_two(p)));
    }
  }
  q.resize(static_cast<size_t>(m_max) + 1, MultiPoly(p));
  return DivisionPolySet(p, std::move(q));
}

MultiPoly eliminate_z_square(const MultiPoly& f) {
  int64_t p = f.characteristic();
  MultiPoly E = curve_rhs(p);
  MultiPoly out(p);
  int zdeg = f.degree(polyalg::kVarZ);
  for (int k = 0; k <= zdeg; ++k) {
    MultiPoly ck = f.coeff_of(polyalg::kVarZ, k);
    if (ck.is_zero()) continue;
    MultiPoly reduced = ck * E.pow(static_cast<uint32_t>(k / 2));
    if (k % 2 == 1) reduced = reduced * MultiPoly::variable(p, polyalg::kVarZ);
    out = out + reduced;
  }
  return out;
}

DivisionPolySet division_polynomials_direct(int64_t p, int m_max) {
  check_inputs(p, m_max);
  MultiPoly z = MultiPoly::variable(p, polyalg::kVarZ);
  MultiPoly E = curve_rhs(p);
  MultiPoly two_E = MultiPoly::constant(p, 2) * E;
  int top = std::max(m_max, 4);
  std::vector<MultiPoly> psi;
  psi.reserve(static_cast<size_t>(top) + 1);
  psi.push_back(MultiPoly(p));
  psi.push_back(MultiPoly::constant(p, 1));
  psi.push_back(MultiPoly::constant(p, 2) * z);
  psi.push_back(psi3_seed(p));
  psi.push_back(psi4_seed(p) * z);
  for (int n = 5; n <= top; ++n) {
    size_t m = static_cast<size_t>(n / 2);
    if (n % 2 == 1) {
      MultiPoly value =
          eliminate_z_square(psi[m + 2] * psi[m].pow(3) - psi[m - 1] * psi[m + 1].pow(3));
      psi.push_back(value);
    } else {
      MultiPoly numerator = eliminate_z_square(
          psi[m] * (psi[m + 2] * psi[m - 1] * psi[m - 1] - psi[m - 2] * psi[m + 1] * psi[m + 1]));
      // The numerator equals 2 y^2 psi-x-part, so dividing by 2E and tacking
      // z back on realizes the division by 2y.
      psi.push_back(MultiPoly::exact_divide(numerator, two_E) * z);
    }
  }
  std::vector<MultiPoly> x_parts;
  x_parts.reserve(static_cast<size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) {
    const MultiPoly& v = psi[static_cast<size_t>(m)];
    if (m % 2 == 0) {
      x_parts.push_back(v.coeff_of(polyalg::kVarZ, 1));
    } else {
      x_parts.push_back(v);
    }
  }
  return DivisionPolySet(p, std::move(x_parts));
}

MultiPoly psi_with_z(const DivisionPolySet& set, int m) {
  MultiPoly v = set.x_part(m);
  if (m % 2 == 0) v = v * MultiPoly::variable(set.p(), polyalg::kVarZ);
  return v;
}

}  // namespace ecdiv
