#include "ecdiv/resolvent.hpp"

#include <stdexcept>

#include "ecdiv/division.hpp"
#include "polyalg/symmetric.hpp"

namespace ecdiv {
namespace {

using polyalg::MultiPoly;

int64_t invmod(int64_t a, int64_t p) {
  int64_t result = 1;
  int64_t base = ((a % p) + p) % p;
  for (int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = (result * base) % p;
    base = (base * base) % p;
  }
  return result;
}

// Elementary symmetric values of the roots of psi_3/3 = x^4 + 2s x^2 + 4t x
// - s^2/3, read off by Vieta.
std::array<MultiPoly, 4> vieta_values(int64_t p) {
  MultiPoly s = MultiPoly::variable(p, polyalg::kVarS);
  MultiPoly t = MultiPoly::variable(p, polyalg::kVarT);
  MultiPoly zero(p);
  MultiPoly e2 = MultiPoly::constant(p, 2) * s;
  MultiPoly e3 = MultiPoly::constant(p, -4) * t;
  MultiPoly e4 = (-(s * s)).scale(invmod(3, p));
  return {zero, e2, e3, e4};
}

MultiPoly reduce_and_substitute(const MultiPoly& symmetric_poly,
                                const std::array<MultiPoly, 4>& values) {
  MultiPoly reduced = polyalg::symmetric_reduce(symmetric_poly, 4);
  for (int i = 0; i < 4; ++i) {
    polyalg::Var ev = static_cast<polyalg::Var>(polyalg::kVarE1 + i);
    reduced = reduced.substitute(ev, values[static_cast<size_t>(i)]);
  }
  return reduced;
}

}  // namespace

ThreeTorsionResolvent three_torsion_resolvent(int64_t p) {
  std::array<MultiPoly, 4> values = vieta_values(p);

  // Consistency of the Vieta reading: rebuilding the quartic from the
  // elementary symmetric values must reproduce psi_3/3.
  MultiPoly x = MultiPoly::variable(p, polyalg::kVarX);
  MultiPoly rebuilt = x.pow(4) - values[0] * x.pow(3) + values[1] * x.pow(2) - values[2] * x +
                      values[3];
  MultiPoly psi3 = division_polynomials(p, 3).x_part(3);
  if (rebuilt.scale(3) != psi3) {
    throw std::logic_error("Vieta values disagree with the 3-division polynomial");
  }

  auto root = [p](int i) {
    return MultiPoly::variable(p, static_cast<polyalg::Var>(polyalg::kVarA1 + i));
  };
  std::array<MultiPoly, 4> alpha = {root(0), root(1), root(2), root(3)};
  MultiPoly th1 = alpha[0] * alpha[1] + alpha[2] * alpha[3];
  MultiPoly th2 = alpha[0] * alpha[2] + alpha[1] * alpha[3];
  MultiPoly th3 = alpha[0] * alpha[3] + alpha[1] * alpha[2];

  ThreeTorsionResolvent out{
      reduce_and_substitute(th1 + th2 + th3, values),
      reduce_and_substitute(th1 * th2 + th1 * th3 + th2 * th3, values),
      reduce_and_substitute(th1 * th2 * th3, values),
      MultiPoly(p), MultiPoly(p), MultiPoly(p)};

  // Depress: T -> T - c1/3 in T^3 + c1 T^2 + c2 T + c3.
  MultiPoly T = MultiPoly::variable(p, polyalg::kVarBigT);
  MultiPoly shift = T - out.c1.scale(invmod(3, p));
  MultiPoly f_shifted = shift.pow(3) + out.c1 * shift.pow(2) + out.c2 * shift + out.c3;
  out.shifted_t2 = f_shifted.coeff_of(polyalg::kVarBigT, 2);
  out.shifted_t1 = f_shifted.coeff_of(polyalg::kVarBigT, 1);
  out.shifted_t0 = f_shifted.coeff_of(polyalg::kVarBigT, 0);
  if (f_shifted.coeff_of(polyalg::kVarBigT, 3) != MultiPoly::constant(p, 1)) {
    throw std::logic_error("depression must preserve monicity");
  }
  return out;
}

}  // namespace ecdiv
