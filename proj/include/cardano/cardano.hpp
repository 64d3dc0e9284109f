#pragma once

#include <array>
#include <stdexcept>

#include "polyalg/finite_field.hpp"
#include "polyalg/rational_function.hpp"
#include "polyalg/unipoly.hpp"
#include "valn/valuation.hpp"

namespace cardano {

struct DiscriminantNotSquare : std::runtime_error {
  DiscriminantNotSquare()
      : std::runtime_error(
            "4A^3 + 27B^2 is not a square, so the splitting field is not "
            "a cyclic cubic extension") {}
};

struct BetaZero : std::invalid_argument {
  BetaZero() : std::invalid_argument("beta must be the nonzero branch") {}
};

template <class K>
struct DepressedCubic {
  K A, B;
};

// R squares to 4A^3 + 27B^2, the negative of the classical discriminant of
// x^3 + Ax + B; the beta formulas below are written against this quantity.
template <class K>
struct CardanoData {
  K R, beta_plus, beta_minus;
};

// Shifts x^3 + c1 x^2 + c2 x + c3 by x -> x - c1/3 and checks the expansion
// coefficients it produces against the closed forms.
template <class K>
DepressedCubic<K> depress(const K& c1, const K& c2, const K& c3) {
  using D = polyalg::PolyDomain<K>;
  if (D::characteristic(c1) < 5)
    throw std::invalid_argument("depression needs characteristic at least 5");
  K third = D::inv(D::from_int(c1, 3));
  K e = c1 * third;
  K A = c2 - c1 * c1 * third;
  K B = c3 - c2 * e + c1 * e * e - e * e * e;

  K x1 = D::from_int(c1, 3) * e * e - (c1 + c1) * e + c2;
  K b27 = D::from_int(c1, 2) * c1 * c1 * c1 -
          D::from_int(c1, 9) * c1 * c2 + D::from_int(c1, 27) * c3;
  if (x1 != A || b27 != D::from_int(c1, 27) * B)
    throw std::logic_error("depression expansion identity failed");
  return DepressedCubic<K>{A, B};
}

template <class K>
K discriminant_quantity(const DepressedCubic<K>& dc) {
  using D = polyalg::PolyDomain<K>;
  return D::from_int(dc.A, 4) * dc.A * dc.A * dc.A +
         D::from_int(dc.B, 27) * dc.B * dc.B;
}

// beta_{+,-} = -B/2 +- R/(6 sqrt(3)) from an explicit square-root witness.
// When R = 0 both branches collapse to -B/2 and sqrt3 goes unused, which is
// what lets fields without a square root of 3 through the repeated-root case.
template <class K>
CardanoData<K> cardano_beta_with(const DepressedCubic<K>& dc, const K& r,
                                 const K& sqrt3) {
  using D = polyalg::PolyDomain<K>;
  if (r * r != discriminant_quantity(dc))
    throw std::invalid_argument("witness does not square to 4A^3 + 27B^2");
  K half_neg_b = -dc.B * D::inv(D::from_int(dc.B, 2));
  CardanoData<K> out{r, half_neg_b, half_neg_b};
  if (!D::is_zero(r)) {
    if (sqrt3 * sqrt3 != D::from_int(sqrt3, 3))
      throw std::invalid_argument("sqrt3 witness does not square to 3");
    K corr = r * D::inv(D::from_int(r, 6) * sqrt3);
    out.beta_plus = half_neg_b + corr;
    out.beta_minus = half_neg_b - corr;
  }
  K sum = out.beta_plus + out.beta_minus;
  K prod27 = D::from_int(dc.A, 27) * out.beta_plus * out.beta_minus;
  if (sum != -dc.B || prod27 != -(dc.A * dc.A * dc.A))
    throw std::logic_error("cardano branch invariants failed");
  return out;
}

// Finite-field version: squareness is decided by scanning the field, and the
// constants come from the field itself.
CardanoData<polyalg::FFElem> cardano_beta(
    const DepressedCubic<polyalg::FFElem>& dc);

struct RootIdentitySigns {
  bool depressed_shift;  // -c1/3 + z - (A/3)/z annihilates f
  bool printed_shift;    // the +c1/3 variant
};

namespace detail {

// Multiplication in K[z]/(z^3 - beta) on (a0, a1, a2) ~ a0 + a1 z + a2 z^2.
template <class K>
std::array<K, 3> qring_mul(const std::array<K, 3>& a, const std::array<K, 3>& b,
                           const K& beta) {
  return {a[0] * b[0] + beta * (a[1] * b[2] + a[2] * b[1]),
          a[0] * b[1] + a[1] * b[0] + beta * (a[2] * b[2]),
          a[0] * b[2] + a[1] * b[1] + a[2] * b[0]};
}

template <class K>
bool annihilates(const K& c1, const K& c2, const K& c3,
                 const std::array<K, 3>& w, const K& beta) {
  using D = polyalg::PolyDomain<K>;
  std::array<K, 3> acc = w;
  acc[0] = acc[0] + c1;
  acc = qring_mul(acc, w, beta);
  acc[0] = acc[0] + c2;
  acc = qring_mul(acc, w, beta);
  acc[0] = acc[0] + c3;
  return D::is_zero(acc[0]) && D::is_zero(acc[1]) && D::is_zero(acc[2]);
}

}  // namespace detail

// In K[z]/(z^3 - beta), tests whether w = -c1/3 + z - (A/3) z^{-1} is a root
// of x^3 + c1 x^2 + c2 x + c3, with z^{-1} realized as z^2/beta.  The second
// flag runs the same test with the shift sign flipped to +c1/3.
template <class K>
RootIdentitySigns root_identity_check(const K& c1, const K& c2, const K& c3,
                                      const K& beta) {
  using D = polyalg::PolyDomain<K>;
  if (D::is_zero(beta)) throw BetaZero();
  DepressedCubic<K> dc = depress(c1, c2, c3);
  K third = D::inv(D::from_int(c1, 3));
  K shift = c1 * third;
  K z2 = -dc.A * third * D::inv(beta);
  K one = D::one(c1);
  bool minus = detail::annihilates(c1, c2, c3, {-shift, one, z2}, beta);
  bool plus = detail::annihilates(c1, c2, c3, {shift, one, z2}, beta);
  return RootIdentitySigns{minus, plus};
}

// Same with the cube root twisted by omega^i: w = -c1/3 + omega^i z
// - (A/3) omega^{2i} z^2 / beta.
template <class K>
bool root_identity_omega_check(const K& c1, const K& c2, const K& c3,
                               const K& beta, const K& omega, int i) {
  using D = polyalg::PolyDomain<K>;
  if (D::is_zero(beta)) throw BetaZero();
  K one = D::one(c1);
  if (omega * omega * omega != one || omega == one)
    throw std::invalid_argument("omega must be a primitive cube root of unity");
  if (i < 0 || i > 2) throw std::invalid_argument("omega exponent out of range");
  DepressedCubic<K> dc = depress(c1, c2, c3);
  K third = D::inv(D::from_int(c1, 3));
  K wi = D::power(omega, static_cast<uint64_t>(i));
  K z2 = -dc.A * third * D::inv(beta) * wi * wi;
  return detail::annihilates(c1, c2, c3, {-c1 * third, wi, z2}, beta);
}

struct CubicValuationReport {
  bool hypotheses_hold;
  bool conclusion_holds;
  valn::ValueExt v_R;
  valn::ValueExt v_B;
  valn::ValueExt v_c3;
  valn::ValueExt v_beta_plus;
  valn::ValueExt v_beta_minus;
};

// For x^3 + c1 x^2 + c2 x + c3 over F_p(u) with a square-root witness for
// 4A^3 + 27B^2: reports whether v(c1) > v(c3)/3 and v(c2) > 2 v(c3)/3 hold,
// and whether v(R) = v(B) = v(c3) with some beta branch of the same value.
// Violated hypotheses are a report state, not an error.
CubicValuationReport cubic_valuation_check(const polyalg::RationalFunction& c1,
                                           const polyalg::RationalFunction& c2,
                                           const polyalg::RationalFunction& c3,
                                           const valn::ValuationSpec& v,
                                           const polyalg::RationalFunction& r);

}  // namespace cardano
