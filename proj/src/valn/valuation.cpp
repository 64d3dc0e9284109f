#include "valn/valuation.hpp"

#include <algorithm>
#include <array>

#include "ecdiv/supersingular.hpp"
#include "ecdiv/theta.hpp"

namespace valn {

using polyalg::MultiPoly;
using polyalg::RationalFunction;
using polyalg::UniPoly;
using polyalg::Var;

namespace {

int64_t floormod(int64_t a, int64_t m) { return ((a % m) + m) % m; }

void require_vars(const MultiPoly& f, std::initializer_list<Var> allowed,
                  const char* what) {
  for (int v = 0; v < polyalg::kVarCount; ++v) {
    Var var = static_cast<Var>(v);
    if (!f.uses(var)) continue;
    if (std::find(allowed.begin(), allowed.end(), var) == allowed.end())
      throw std::invalid_argument(std::string(what) +
                                  " uses a variable outside its domain");
  }
}

int64_t divisibility_order(const MultiPoly& prime, const MultiPoly& f) {
  int64_t k = 0;
  MultiPoly cur = f;
  while (true) {
    std::optional<MultiPoly> next = MultiPoly::try_divide(cur, prime);
    if (!next) return k;
    cur = *next;
    ++k;
  }
}

}  // namespace

ValuationSpec ValuationSpec::h_adic(const MultiPoly& h) {
  if (h.is_zero() || h.is_constant())
    throw std::invalid_argument("h-adic prime must be nonconstant");
  require_vars(h, {polyalg::kVarS, polyalg::kVarT}, "h-adic prime");
  return ValuationSpec(ValuationKind::kHAdic, h.normalized());
}

ValuationSpec ValuationSpec::pi_adic(const MultiPoly& pi) {
  if (pi.is_zero() || pi.is_constant())
    throw std::invalid_argument("pi-adic prime must be nonconstant");
  require_vars(pi, {polyalg::kVarU}, "pi-adic prime");
  int64_t deg = pi.degree(polyalg::kVarU);
  if (deg > 3)
    throw std::invalid_argument(
        "pi-adic prime degree exceeds the range the root scan certifies");
  // Linear polynomials are irreducible outright; degree 2 and 3 polynomials
  // are reducible exactly when they have a root.
  if (deg >= 2) {
    int64_t p = pi.characteristic();
    for (int64_t u = 0; u < p; ++u) {
      std::array<int64_t, polyalg::kVarCount> point{};
      point[polyalg::kVarU] = u;
      if (pi.evaluate(point) == 0)
        throw std::invalid_argument("pi-adic prime has a root, so it factors");
    }
  }
  return ValuationSpec(ValuationKind::kPiAdic, pi.normalized());
}

ValueExt valuate(const ValuationSpec& v, const MultiPoly& g) {
  if (g.characteristic() != v.characteristic())
    throw std::invalid_argument("valuation and argument characteristics differ");
  if (g.is_zero()) return ValueExt::infinity();
  return ValueExt::finite(divisibility_order(v.prime(), g));
}

ValueExt valuate(const ValuationSpec& v, const RationalFunction& g) {
  if (g.characteristic() != v.characteristic())
    throw std::invalid_argument("valuation and argument characteristics differ");
  if (g.is_zero()) return ValueExt::infinity();
  return ValueExt::finite(divisibility_order(v.prime(), g.num()) -
                          divisibility_order(v.prime(), g.den()));
}

MultiPoly ss_prime_poly(int64_t p, int64_t j0) {
  std::vector<int64_t> ss = ecdiv::supersingular_j_list(p);
  int64_t j = floormod(j0, p);
  if (j == 0 || j == floormod(1728, p)) throw BadJInvariant();
  if (std::find(ss.begin(), ss.end(), j) == ss.end()) throw BadJInvariant();

  MultiPoly s3 = MultiPoly::variable(p, polyalg::kVarS, 3);
  MultiPoly t2 = MultiPoly::variable(p, polyalg::kVarT, 2);
  MultiPoly h =
      s3.scale(floormod(6912 - 4 * j, p)) - t2.scale(floormod(27 * j, p));
  h = h.normalized();

  // Viewed as a quadratic in t, the constant coefficient is a nonzero
  // multiple of s^3; its odd s-degree makes it a non-square in F_p(s), so
  // the quadratic is irreducible and by primitivity so is h itself.
  if (h.degree(polyalg::kVarT) != 2 ||
      h.coeff_of(polyalg::kVarT, 2).is_zero() ||
      h.coeff_of(polyalg::kVarT, 0).degree(polyalg::kVarS) % 2 != 1)
    throw std::logic_error("supersingular prime lost its quadratic shape");
  return h;
}

std::vector<int64_t> usable_ss_j_values(int64_t p) {
  std::vector<int64_t> out;
  for (int64_t j : ecdiv::supersingular_j_list(p)) {
    if (j == 0 || j == floormod(1728, p)) continue;
    out.push_back(j);
  }
  return out;
}

namespace {

// v(c) > (i/n) v(last), compared without leaving the integers.
bool hypothesis_holds(const ValueExt& vc, int64_t i, const ValueExt& vlast,
                      int64_t n) {
  if (vc.is_infinite()) return !vlast.is_infinite();
  if (vlast.is_infinite()) return false;
  return n * vc.value() > i * vlast.value();
}

}  // namespace

DiscLemmaReport disc_lemma_check(const UniPoly<RationalFunction>& f,
                                 const ValuationSpec& v) {
  int64_t n = f.degree();
  if (n < 2) throw std::invalid_argument("discriminant lemma needs degree >= 2");
  if (!f.is_monic())
    throw std::invalid_argument("discriminant lemma needs a monic polynomial");
  int64_t p = f.leading().characteristic();
  if (p != v.characteristic())
    throw std::invalid_argument("valuation and polynomial characteristics differ");
  if (n % p == 0)
    throw std::invalid_argument("degree must be a unit in the residue field");

  ValueExt v_last = valuate(v, f.coeff(0));
  bool hyp = true;
  for (int64_t i = 1; i < n; ++i) {
    if (!hypothesis_holds(valuate(v, f.coeff(n - i)), i, v_last, n)) {
      hyp = false;
      break;
    }
  }

  ValueExt v_disc = valuate(v, polyalg::discriminant(f));
  bool concl = v_last.is_infinite()
                   ? v_disc.is_infinite()
                   : v_disc == ValueExt::finite((n - 1) * v_last.value());
  return DiscLemmaReport{hyp, concl, v_disc, v_last};
}

KummerPairReport kummer_pair_check(const polyalg::FiniteField& F, int l) {
  if (l != 2 && l != 3)
    throw std::invalid_argument("kummer check supports l = 2 and l = 3 only");
  if (F.p() == l)
    throw std::invalid_argument("kummer check needs the characteristic prime to l");
  int64_t q = F.order();
  if ((q - 1) % l != 0)
    throw std::invalid_argument("field has no primitive l-th root of unity");

  uint64_t m = static_cast<uint64_t>((q - 1) / l);
  std::vector<polyalg::FFElem> elems;
  std::vector<bool> power;
  elems.reserve(q - 1);
  for (int64_t idx = 1; idx < q; ++idx) {
    polyalg::FFElem b = F.element_at(idx);
    elems.push_back(b);
    power.push_back(b.pow(m) == F.one());
  }

  KummerPairReport r{0, 0, 0, 0, 0, 0, 0};
  for (size_t a = 0; a < elems.size(); ++a) {
    for (size_t b = 0; b < elems.size(); ++b) {
      ++r.pairs_total;
      if (power[a] != power[b]) {
        ++r.mixed;
        continue;
      }
      ++r.same_extension;
      bool plus = (elems[a] * elems[b]).pow(m) == F.one();
      bool minus = (elems[a].inverse() * elems[b]).pow(m) == F.one();
      if (plus && minus)
        ++r.eps_both;
      else if (plus)
        ++r.eps_plus_only;
      else if (minus)
        ++r.eps_minus_only;
      else
        ++r.failures;
    }
  }
  return r;
}

CoefficientValuationReport coefficient_valuation_report(int64_t p, int64_t j0) {
  CoefficientValuationReport rep{false,
                                 "",
                                 p,
                                 j0,
                                 MultiPoly::constant(p, 0),
                                 {},
                                 ValueExt::infinity(),
                                 std::nullopt};
  if (usable_ss_j_values(p).empty()) {
    rep.reason =
        "every supersingular j-invariant mod p is 0 or 1728, so no "
        "supersingular prime polynomial exists";
    return rep;
  }

  rep.h = ss_prime_poly(p, j0);
  ValuationSpec v = ValuationSpec::h_adic(rep.h);
  ecdiv::Theta th = ecdiv::theta_extract(p);

  int64_t half = (p - 1) / 2;
  for (int64_t i = 0; i <= half; ++i) {
    RationalFunction ratio(th.a[static_cast<size_t>(i)], th.a[0]);
    std::optional<int64_t> expected;
    if (i == 0) expected = 0;
    if (i == half) expected = -1;
    rep.rows.push_back(CoefficientValuationRow{
        static_cast<int>(i), half + p * i, valuate(v, ratio), expected});
  }

  rep.v_mu = valuate(v, ecdiv::mu_discriminant(p));
  rep.expected_mu = -(p - 3) / 2;
  rep.valid = true;
  return rep;
}

}  // namespace valn
