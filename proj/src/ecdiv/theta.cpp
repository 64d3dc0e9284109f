#include "ecdiv/theta.hpp"

#include "polyalg/unipoly.hpp"

namespace ecdiv {
namespace {

using polyalg::MultiPoly;
using polyalg::RationalFunction;

// Exponent-wise p-th root; defined exactly when every exponent of every term
// is divisible by p (coefficients are fixed by the Frobenius on F_p).
MultiPoly pth_root(const MultiPoly& f) {
  int64_t p = f.characteristic();
  std::vector<polyalg::Term> roots;
  roots.reserve(f.terms().size());
  for (const polyalg::Term& term : f.terms()) {
    polyalg::Term root = term;
    for (int v = 0; v < polyalg::kVarCount; ++v) {
      uint16_t e = term.exp[static_cast<size_t>(v)];
      if (e % p != 0) throw RadicalDegreeMismatch();
      root.exp[static_cast<size_t>(v)] = static_cast<uint16_t>(e / p);
    }
    roots.push_back(root);
  }
  return MultiPoly::from_terms(p, std::move(roots));
}

}  // namespace

MultiPoly radical_in_x(const MultiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("radical of the zero polynomial");
  int64_t p = f.characteristic();
  if (f.degree(polyalg::kVarX) == 0) return MultiPoly::constant(p, 1);
  MultiPoly d = f.derivative(polyalg::kVarX);
  if (d.is_zero()) return radical_in_x(pth_root(f));

  MultiPoly g = polyalg::multi_gcd(f, d);
  MultiPoly v = MultiPoly::exact_divide(f, g);
  MultiPoly rest = f;
  while (true) {
    MultiPoly common = polyalg::multi_gcd(rest, v);
    if (common.degree(polyalg::kVarX) == 0) break;
    rest = MultiPoly::exact_divide(rest, common);
  }
  // rest now holds exactly the factors of x-multiplicity divisible by p.
  MultiPoly tail = radical_in_x(pth_root(rest));
  MultiPoly out = v * tail;
  MultiPoly content = polyalg::content_in(out, polyalg::kVarX);
  return MultiPoly::exact_divide(out, content).normalized();
}

Theta theta_extract(int64_t p) {
  if (p < 5 || p > 13) throw std::invalid_argument("theta extraction runs at desk scale only");
  DivisionPolySet set = division_polynomials(p, static_cast<int>(p));
  const MultiPoly& psi_p = set.x_part(static_cast<int>(p));
  int64_t half = (p - 1) / 2;
  int64_t top = (p * p - 1) / 2;
  Theta th{p, {}, MultiPoly(p)};
  MultiPoly X = MultiPoly::variable(p, polyalg::kVarBigX);
  for (int64_t i = 0; i <= half; ++i) {
    int64_t k = half + p * i;
    MultiPoly a_k = psi_p.coeff_of(polyalg::kVarX, static_cast<int>(top - k));
    th.a.push_back(a_k);
    th.theta = th.theta + a_k * X.pow(static_cast<uint32_t>(half - i));
  }
  if (th.a.front().is_zero()) throw polyalg::ZeroLeadingCoefficient();
  return th;
}

ThetaRadicalReport theta_radical_check_with(int64_t p, const MultiPoly& psi_stand_in) {
  if (p != 5 && p != 7) throw std::invalid_argument("radical check is specified for p = 5, 7");
  Theta th = theta_extract(p);

  MultiPoly s = MultiPoly::variable(p, polyalg::kVarS);
  MultiPoly t = MultiPoly::variable(p, polyalg::kVarT);
  MultiPoly embedded = psi_stand_in.substitute(polyalg::kVarS, s.pow(static_cast<uint32_t>(p)))
                           .substitute(polyalg::kVarT, t.pow(static_cast<uint32_t>(p)));

  MultiPoly rad = radical_in_x(embedded);
  if (rad.degree(polyalg::kVarX) != static_cast<int>((p - 1) / 2)) {
    throw RadicalDegreeMismatch();
  }

  // theta = a * (monic radical) cross-multiplied: lc(rad) * theta == a * rad.
  MultiPoly theta_x = th.theta.substitute(polyalg::kVarBigX,
                                          MultiPoly::variable(p, polyalg::kVarX));
  MultiPoly lc = rad.leading_coeff_in(polyalg::kVarX);
  if (lc * theta_x != th.a.front() * rad) throw TwistMismatch();
  return {rad.degree(polyalg::kVarX), rad};
}

ThetaRadicalReport theta_radical_check(int64_t p) {
  if (p != 5 && p != 7) throw std::invalid_argument("radical check is specified for p = 5, 7");
  DivisionPolySet set = division_polynomials(p, static_cast<int>(p));
  return theta_radical_check_with(p, set.x_part(static_cast<int>(p)));
}

RationalFunction mu_discriminant(int64_t p) {
  if (p != 5 && p != 13) {
    throw std::invalid_argument("mu is specified for p = 5 and p = 13 only");
  }
  Theta th = theta_extract(p);
  size_t n = th.a.size() - 1;

  std::vector<MultiPoly> ascending(th.a.rbegin(), th.a.rend());
  polyalg::UniPoly<MultiPoly> theta_poly(std::move(ascending));
  polyalg::UniPoly<MultiPoly> dtheta = theta_poly.derivative();
  if (dtheta.is_zero()) throw ZeroDiscriminant();
  MultiPoly res = polyalg::resultant(theta_poly, dtheta);

  // Disc((1/a) theta) = (-1)^{n(n-1)/2} Res(theta, theta') / a^{2n-1}.
  MultiPoly numerator = res;
  if ((n * (n - 1) / 2) % 2 != 0) numerator = -numerator;
  RationalFunction mu(numerator, th.a.front().pow(static_cast<uint32_t>(2 * n - 1)));
  if (mu.is_zero()) throw ZeroDiscriminant();
  return mu;
}

}  // namespace ecdiv
