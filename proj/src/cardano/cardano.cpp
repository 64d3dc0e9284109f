#include "cardano/cardano.hpp"

namespace cardano {

using polyalg::FFElem;
using polyalg::FiniteField;
using polyalg::RationalFunction;
using valn::ValueExt;

CardanoData<FFElem> cardano_beta(const DepressedCubic<FFElem>& dc) {
  const FiniteField* F = dc.A.field();
  FFElem disc = discriminant_quantity(dc);
  if (disc.is_zero()) return cardano_beta_with(dc, F->zero(), F->zero());

  polyalg::SpecialConstants consts = polyalg::find_special_constants(*F);
  if (!consts.has_omega || !consts.has_sqrt3)
    throw std::invalid_argument(
        "field lacks a primitive cube root of unity or a square root of 3");
  for (int64_t idx = 0; idx < static_cast<int64_t>(F->order()); ++idx) {
    FFElem r = F->element_at(idx);
    if (r * r == disc) return cardano_beta_with(dc, r, consts.sqrt3);
  }
  throw DiscriminantNotSquare();
}

namespace {

// n * va > m * vb with the usual conventions at infinity.
bool scaled_greater(const ValueExt& va, int64_t n, const ValueExt& vb,
                    int64_t m) {
  if (va.is_infinite()) return !vb.is_infinite();
  if (vb.is_infinite()) return false;
  return n * va.value() > m * vb.value();
}

}  // namespace

CubicValuationReport cubic_valuation_check(const RationalFunction& c1,
                                           const RationalFunction& c2,
                                           const RationalFunction& c3,
                                           const valn::ValuationSpec& v,
                                           const RationalFunction& r) {
  DepressedCubic<RationalFunction> dc = depress(c1, c2, c3);

  int64_t p = v.characteristic();
  RationalFunction sqrt3 = RationalFunction::constant(p, 0);
  if (!r.is_zero()) {
    for (int64_t k = 1; k < p; ++k) {
      if ((k * k) % p == 3 % p) {
        sqrt3 = RationalFunction::constant(p, k);
        break;
      }
    }
    if (sqrt3.is_zero())
      throw std::invalid_argument(
          "coefficient field has no square root of 3");
  }
  CardanoData<RationalFunction> data = cardano_beta_with(dc, r, sqrt3);

  ValueExt v_c1 = valn::valuate(v, c1);
  ValueExt v_c2 = valn::valuate(v, c2);
  ValueExt v_c3 = valn::valuate(v, c3);
  bool hyp = scaled_greater(v_c1, 3, v_c3, 1) &&
             scaled_greater(v_c2, 3, v_c3, 2);

  CubicValuationReport rep{hyp,
                           false,
                           valn::valuate(v, data.R),
                           valn::valuate(v, dc.B),
                           v_c3,
                           valn::valuate(v, data.beta_plus),
                           valn::valuate(v, data.beta_minus)};
  rep.conclusion_holds =
      rep.v_R == v_c3 && rep.v_B == v_c3 &&
      (rep.v_beta_plus == v_c3 || rep.v_beta_minus == v_c3);
  return rep;
}

}  // namespace cardano
