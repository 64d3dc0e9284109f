#include <doctest.h>

#include <optional>
#include <vector>

#include "modcore/residue.hpp"
#include "polyalg/finite_field.hpp"
#include "polyalg/multipoly.hpp"
#include "polyalg/rational_function.hpp"
#include "polyalg/symmetric.hpp"
#include "polyalg/unipoly.hpp"
#include "support/rng.hpp"

using polyalg::FFElem;
using polyalg::FiniteField;
using polyalg::MultiPoly;
using polyalg::RationalFunction;
using polyalg::UniPoly;

namespace {

MultiPoly var_s(int64_t p) { return MultiPoly::variable(p, polyalg::kVarS); }
MultiPoly var_t(int64_t p) { return MultiPoly::variable(p, polyalg::kVarT); }
MultiPoly var_x(int64_t p) { return MultiPoly::variable(p, polyalg::kVarX); }
MultiPoly cst(int64_t p, int64_t c) { return MultiPoly::constant(p, c); }

MultiPoly random_stx_poly(support::SplitMix64& rng, int64_t p, int max_terms = 3) {
  MultiPoly acc(p);
  int terms = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_terms)));
  for (int i = 0; i < terms; ++i) {
    MultiPoly term = cst(p, rng.range(1, p - 1));
    term = term * var_s(p).pow(static_cast<uint32_t>(rng.below(3)));
    term = term * var_t(p).pow(static_cast<uint32_t>(rng.below(3)));
    term = term * var_x(p).pow(static_cast<uint32_t>(rng.below(3)));
    acc = acc + term;
  }
  return acc;
}

UniPoly<FFElem> random_unipoly(support::SplitMix64& rng, const FiniteField& F, int max_deg) {
  int deg = static_cast<int>(rng.below(static_cast<uint64_t>(max_deg + 1)));
  std::vector<FFElem> c;
  for (int i = 0; i < deg; ++i) {
    c.push_back(F.element(rng.range(0, F.p() - 1)));
  }
  c.push_back(F.element(rng.range(1, F.p() - 1)));
  return UniPoly<FFElem>(std::move(c));
}

}  // namespace

TEST_SUITE("polyalg") {

TEST_CASE("multivariate arithmetic satisfies the ring axioms") {
  for (int64_t p : {5, 13}) {
    support::SplitMix64 rng = support::case_rng(2024, "ring-axioms");
    for (int trial = 0; trial < 25; ++trial) {
      MultiPoly a = random_stx_poly(rng, p);
      MultiPoly b = random_stx_poly(rng, p);
      MultiPoly c = random_stx_poly(rng, p);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (b + c) == (a + b) + c);
      CHECK(a - a == MultiPoly(p));
      CHECK(a * cst(p, 1) == a);
    }
  }
}

TEST_CASE("exact division cancels factors and rejects non-factors") {
  int64_t p = 13;
  MultiPoly s = var_s(p);
  MultiPoly t = var_t(p);
  CHECK(MultiPoly::exact_divide(s * s - t * t, s - t) == s + t);
  CHECK_THROWS_AS(MultiPoly::exact_divide(s, t), polyalg::NotDivisible);

  MultiPoly lambda = cst(p, 4) * s.pow(3) + cst(p, 27) * t.pow(2);
  MultiPoly h = s.pow(3) + cst(p, 4) * t.pow(2);
  CHECK(MultiPoly::exact_divide(lambda * h, h) == lambda);

  CHECK(MultiPoly::try_divide(s * t, t).has_value());
  CHECK_FALSE(MultiPoly::try_divide(s + t, t).has_value());
  CHECK_THROWS_AS(MultiPoly::exact_divide(s, MultiPoly(p)), std::invalid_argument);
}

TEST_CASE("multivariate gcd finds the common factor up to normalization") {
  int64_t p = 13;
  MultiPoly s = var_s(p);
  MultiPoly t = var_t(p);

  MultiPoly g = polyalg::multi_gcd((s - t) * (s + t), (s - t) * t);
  CHECK(g == s - t);

  CHECK(polyalg::multi_gcd(s * t, MultiPoly(p)) == s * t);
  CHECK(polyalg::multi_gcd(MultiPoly(p), cst(p, 5) * s) == s);
  CHECK(polyalg::multi_gcd(s + cst(p, 1), t + cst(p, 1)) == cst(p, 1));
  CHECK(polyalg::multi_gcd(cst(p, 7), s) == cst(p, 1));

  MultiPoly common = s * s + t;
  MultiPoly left = common * (s + cst(p, 2));
  MultiPoly right = common * (t + cst(p, 3));
  CHECK(polyalg::multi_gcd(left, right) == common);
}

TEST_CASE("rational functions reduce and compare by cross multiplication") {
  int64_t p = 13;
  MultiPoly s = var_s(p);
  MultiPoly t = var_t(p);

  RationalFunction lhs(s * s - t * t, s - t);
  CHECK(lhs == RationalFunction(s + t));
  CHECK(lhs.den() == cst(p, 1));

  RationalFunction inv_s(cst(p, 1), s);
  RationalFunction inv_t(cst(p, 1), t);
  CHECK(inv_s + inv_t == RationalFunction(s + t, s * t));
  CHECK(inv_s * inv_t == RationalFunction(cst(p, 1), s * t));
  CHECK(inv_s.inverse() == RationalFunction(s));
  CHECK((inv_s - inv_s).is_zero());

  RationalFunction scaled(cst(p, 3) * s, cst(p, 6) * t);
  CHECK(scaled.den().leading_unit() == 1);
  CHECK(scaled == RationalFunction(cst(p, 7) * s, t));

  CHECK_THROWS_AS(RationalFunction(s, MultiPoly(p)), std::invalid_argument);
  CHECK_THROWS_AS(RationalFunction(s).inverse() * RationalFunction(MultiPoly(p)).inverse(),
                  std::invalid_argument);
}

TEST_CASE("prime fields and small extensions") {
  FiniteField F13(13);
  CHECK(F13.order() == 13);
  CHECK(F13.element(7) * F13.element(2) == F13.element(1));
  CHECK(F13.element(7).inverse() == F13.element(2));
  CHECK_THROWS_AS(F13.zero().inverse(), modcore::NotAUnit);
  CHECK_THROWS_AS(FiniteField(12), std::invalid_argument);

  FiniteField F25(5, 2);
  CHECK(F25.order() == 25);
  CHECK(F25.modulus().size() == 3);
  FFElem g = F25.generator();
  CHECK(g.pow(24) == F25.one());
  for (uint64_t i = 1; i < F25.order(); ++i) {
    FFElem x = F25.element_at(i);
    CHECK(x * x.inverse() == F25.one());
  }

  FiniteField F125(5, 3);
  CHECK(F125.order() == 125);
  FFElem gen = F125.generator();
  CHECK(gen.pow(124) == F125.one());
  CHECK((gen + F125.one()) * (gen + F125.one()).inverse() == F125.one());

  CHECK_THROWS_AS(FiniteField(5, 2, {-1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(5, 2, {1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(5, 4), std::invalid_argument);

  FiniteField other(7);
  CHECK_THROWS_AS(F13.one() + other.one(), std::invalid_argument);
}

TEST_CASE("special constant scan matches hand values") {
  polyalg::SpecialConstants c13 = polyalg::find_special_constants(FiniteField(13));
  CHECK(c13.has_omega);
  CHECK(c13.omega.coeffs()[0] == 3);
  CHECK(c13.has_sqrt3);
  CHECK(c13.sqrt3.coeffs()[0] == 4);

  polyalg::SpecialConstants c5 = polyalg::find_special_constants(FiniteField(5));
  CHECK_FALSE(c5.has_omega);
  CHECK_FALSE(c5.has_sqrt3);

  polyalg::SpecialConstants c7 = polyalg::find_special_constants(FiniteField(7));
  CHECK(c7.has_omega);
  CHECK(c7.omega.coeffs()[0] == 2);
  CHECK_FALSE(c7.has_sqrt3);

  polyalg::SpecialConstants c37 = polyalg::find_special_constants(FiniteField(37));
  CHECK(c37.has_omega);
  CHECK(c37.omega.coeffs()[0] == 10);
  CHECK(c37.has_sqrt3);
  CHECK(c37.sqrt3.coeffs()[0] == 15);

  FiniteField F25(5, 2);
  polyalg::SpecialConstants c25 = polyalg::find_special_constants(F25);
  CHECK(c25.has_omega);
  CHECK(c25.omega != F25.one());
  CHECK(c25.omega * c25.omega * c25.omega == F25.one());
  CHECK(c25.has_sqrt3);
  CHECK(c25.sqrt3 * c25.sqrt3 == F25.element(3));
}

TEST_CASE("univariate gcd over a field is monic and Euclidean") {
  FiniteField F5(5);
  FFElem z = F5.zero();
  UniPoly<FFElem> x2 = UniPoly<FFElem>::from_ints(z, {0, 0, 1});
  UniPoly<FFElem> x3 = UniPoly<FFElem>::from_ints(z, {0, 0, 0, 1});
  // x^2 divides both inputs, so it is the gcd; anything smaller would fail
  // the "every common divisor divides the gcd" contract.
  CHECK(poly_gcd(x2, x3) == x2);

  UniPoly<FFElem> f = UniPoly<FFElem>::from_ints(z, {1, 2, 3});
  UniPoly<FFElem> zero(z);
  UniPoly<FFElem> monic_f = f.scale(f.leading().inverse());
  CHECK(poly_gcd(f, zero) == monic_f);
  CHECK(poly_gcd(zero, f) == monic_f);

  UniPoly<FFElem> m1 = UniPoly<FFElem>::from_ints(z, {-1, 1});
  UniPoly<FFElem> m2 = UniPoly<FFElem>::from_ints(z, {-2, 1});
  UniPoly<FFElem> m3 = UniPoly<FFElem>::from_ints(z, {-3, 1});
  CHECK(poly_gcd(m1 * m1 * m2, m1 * m3) == m1);

  FiniteField F13(13);
  support::SplitMix64 rng = support::case_rng(2024, "divmod");
  for (int trial = 0; trial < 50; ++trial) {
    UniPoly<FFElem> a = random_unipoly(rng, F13, 6);
    UniPoly<FFElem> b = random_unipoly(rng, F13, 3);
    auto [q, r] = poly_divmod(a, b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.degree() < b.degree()));
  }
}

TEST_CASE("resultants follow the classical Sylvester convention") {
  // Convention: deg(g) rows of f's coefficients first, descending powers, so
  // Res(f, g) = lc(f)^deg(g) * product of g over the roots of f.  For the
  // pair below that is g(2) = -1, i.e. 6 mod 7.
  FiniteField F7(7);
  FFElem z7 = F7.zero();
  UniPoly<FFElem> f = UniPoly<FFElem>::from_ints(z7, {-2, 1});
  UniPoly<FFElem> g = UniPoly<FFElem>::from_ints(z7, {-3, 1});
  CHECK(resultant(f, g) == F7.element(6));
  CHECK(resultant(g, f) == F7.element(1));

  FiniteField F5(5);
  FFElem z5 = F5.zero();
  UniPoly<FFElem> h = UniPoly<FFElem>::from_ints(z5, {1, 0, 1});
  CHECK(resultant(h, h) == F5.zero());
  UniPoly<FFElem> h2 = UniPoly<FFElem>::from_ints(z5, {-1, 0, 1});
  CHECK(resultant(h, h2) == F5.element(4));

  UniPoly<FFElem> c = UniPoly<FFElem>::from_ints(z5, {3});
  CHECK(resultant(c, h) == F5.element(4));
  CHECK(resultant(h, c) == F5.element(4));
  CHECK_THROWS_AS(resultant(UniPoly<FFElem>(z5), h), std::invalid_argument);

  int64_t p = 13;
  MultiPoly s = var_s(p);
  MultiPoly t = var_t(p);
  MultiPoly one = cst(p, 1);
  UniPoly<MultiPoly> fs(std::vector<MultiPoly>{-s, MultiPoly(p), one});
  UniPoly<MultiPoly> ft(std::vector<MultiPoly>{-t, MultiPoly(p), one});
  CHECK(resultant(fs, ft) == (s - t) * (s - t));
}

TEST_CASE("resultant vanishes exactly when the gcd is nontrivial") {
  FiniteField F13(13);
  support::SplitMix64 rng = support::case_rng(2024, "res-gcd");
  for (int trial = 0; trial < 200; ++trial) {
    UniPoly<FFElem> a = random_unipoly(rng, F13, 4);
    UniPoly<FFElem> b = random_unipoly(rng, F13, 4);
    bool res_zero = resultant(a, b).is_zero();
    bool common_factor = poly_gcd(a, b).degree() > 0;
    CHECK(res_zero == common_factor);
  }
}

TEST_CASE("monic discriminants match hand values") {
  FiniteField F7(7);
  UniPoly<FFElem> x2p1 = UniPoly<FFElem>::from_ints(F7.zero(), {1, 0, 1});
  CHECK(discriminant(x2p1) == F7.element(3));

  FiniteField F5(5);
  UniPoly<FFElem> x3p1 = UniPoly<FFElem>::from_ints(F5.zero(), {1, 0, 0, 1});
  CHECK(discriminant(x3p1) == F5.element(3));

  for (int64_t p : {5, 7, 11, 13}) {
    FiniteField F(p);
    for (int n = 2; n <= 8; ++n) {
      if (n % p == 0) continue;
      std::vector<int64_t> coeffs(static_cast<size_t>(n) + 1, 0);
      coeffs.front() = 1;
      coeffs.back() = 1;
      UniPoly<FFElem> xn = UniPoly<FFElem>::from_ints(F.zero(), coeffs);
      FFElem expected = F.element(n).pow(static_cast<uint64_t>(n));
      if ((n * (n - 1) / 2) % 2 != 0) expected = -expected;
      CHECK(discriminant(xn) == expected);
    }
  }

  std::vector<int64_t> x5p1 = {1, 0, 0, 0, 0, 1};
  CHECK_THROWS_AS(discriminant(UniPoly<FFElem>::from_ints(F5.zero(), x5p1)),
                  polyalg::ZeroDerivative);
  CHECK_THROWS_AS(discriminant(UniPoly<FFElem>::from_ints(F5.zero(), {1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(discriminant(UniPoly<FFElem>::from_ints(F5.zero(), {1, 0, 2})),
                  std::invalid_argument);

  int64_t p = 13;
  MultiPoly s = var_s(p);
  MultiPoly t = var_t(p);
  UniPoly<MultiPoly> cubic(std::vector<MultiPoly>{t, s, MultiPoly(p), cst(p, 1)});
  MultiPoly expected = -(cst(p, 4) * s.pow(3) + cst(p, 27) * t.pow(2));
  CHECK(discriminant(cubic) == expected);

  RationalFunction rs(s);
  RationalFunction rt(t);
  RationalFunction rzero{MultiPoly(p)};
  RationalFunction rone = RationalFunction::constant(p, 1);
  UniPoly<RationalFunction> rcubic(std::vector<RationalFunction>{rt, rs, rzero, rone});
  CHECK(discriminant(rcubic) == RationalFunction(expected));
}

TEST_CASE("coefficient Frobenius twists") {
  int64_t p = 5;
  MultiPoly s = var_s(p);
  MultiPoly one = cst(p, 1);

  UniPoly<MultiPoly> lin(std::vector<MultiPoly>{-s, one});
  UniPoly<MultiPoly> twisted = frobenius_coeff_power(lin);
  CHECK(twisted == UniPoly<MultiPoly>(std::vector<MultiPoly>{-s.pow(5), one}));

  UniPoly<MultiPoly> constant_coeffs(std::vector<MultiPoly>{cst(p, 3), cst(p, 2), one});
  CHECK(frobenius_coeff_power(constant_coeffs) == constant_coeffs);

  support::SplitMix64 rng = support::case_rng(2024, "frobenius");
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly g1 = random_stx_poly(rng, p, 2);
    MultiPoly g2 = random_stx_poly(rng, p, 2);
    UniPoly<MultiPoly> f1(std::vector<MultiPoly>{-g1, one});
    UniPoly<MultiPoly> f2(std::vector<MultiPoly>{-g2, one});
    CHECK(frobenius_coeff_power(f1 * f2) ==
          UniPoly<MultiPoly>(std::vector<MultiPoly>{-g1.pow(5), one}) *
              UniPoly<MultiPoly>(std::vector<MultiPoly>{-g2.pow(5), one}));

    UniPoly<MultiPoly> a(std::vector<MultiPoly>{g1, g2, one});
    UniPoly<MultiPoly> b(std::vector<MultiPoly>{g2, g1});
    CHECK(frobenius_coeff_power(a * b) ==
          frobenius_coeff_power(a) * frobenius_coeff_power(b));
    CHECK(frobenius_coeff_power(a + b) ==
          frobenius_coeff_power(a) + frobenius_coeff_power(b));
  }
}

TEST_CASE("symmetric reduction by elimination of leading terms") {
  int64_t p = 13;
  MultiPoly a1 = MultiPoly::variable(p, polyalg::kVarA1);
  MultiPoly a2 = MultiPoly::variable(p, polyalg::kVarA2);
  MultiPoly a3 = MultiPoly::variable(p, polyalg::kVarA3);
  MultiPoly e1 = MultiPoly::variable(p, polyalg::kVarE1);
  MultiPoly e2 = MultiPoly::variable(p, polyalg::kVarE2);
  MultiPoly e3 = MultiPoly::variable(p, polyalg::kVarE3);

  CHECK(polyalg::symmetric_reduce(a1 + a2, 2) == e1);
  CHECK(polyalg::symmetric_reduce(a1 * a1 + a2 * a2, 2) == e1 * e1 - cst(p, 2) * e2);

  MultiPoly p3 = a1.pow(3) + a2.pow(3) + a3.pow(3);
  MultiPoly newton = e1.pow(3) - cst(p, 3) * e1 * e2 + cst(p, 3) * e3;
  CHECK(polyalg::symmetric_reduce(p3, 3) == newton);

  CHECK_THROWS_AS(polyalg::symmetric_reduce(a1, 2), polyalg::NotSymmetric);
  CHECK_THROWS_AS(polyalg::symmetric_reduce(var_s(p) + a1 + a2, 2), std::invalid_argument);
  CHECK_THROWS_AS(polyalg::symmetric_reduce(a1 + a2 + a3, 2), std::invalid_argument);
}

TEST_CASE("symmetric reduction round trips against substitution") {
  int64_t p = 13;
  support::SplitMix64 rng = support::case_rng(2024, "symmetric-roundtrip");
  for (int trial = 0; trial < 50; ++trial) {
    int m = 1 + static_cast<int>(rng.below(4));
    MultiPoly r(p);
    int terms = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < terms; ++i) {
      MultiPoly term = cst(p, rng.range(1, p - 1));
      for (int j = 0; j < m; ++j) {
        polyalg::Var ev = static_cast<polyalg::Var>(polyalg::kVarE1 + j);
        term = term * MultiPoly::variable(p, ev).pow(static_cast<uint32_t>(rng.below(3)));
      }
      r = r + term;
    }
    MultiPoly q = polyalg::substitute_elementary(r, m);
    MultiPoly reduced = polyalg::symmetric_reduce(q, m);
    CHECK(reduced == r);
    CHECK(polyalg::substitute_elementary(reduced, m) == q);
  }
}

TEST_CASE("substitution, transposition, and evaluation") {
  int64_t p = 13;
  MultiPoly s = var_s(p);
  MultiPoly t = var_t(p);
  MultiPoly x = var_x(p);

  MultiPoly sub = (x * x + t).substitute(polyalg::kVarX, s * s + cst(p, 1));
  CHECK(sub == (s * s + cst(p, 1)).pow(2) + t);

  CHECK((s * s * t).transpose_vars(polyalg::kVarS, polyalg::kVarT) == t * t * s);

  std::array<int64_t, polyalg::kVarCount> point = {};
  point[polyalg::kVarS] = 2;
  point[polyalg::kVarT] = 3;
  MultiPoly lambda = cst(p, 4) * s.pow(3) + cst(p, 27) * t.pow(2);
  CHECK(lambda.evaluate(point) == (4 * 8 + 27 * 9) % p);

  MultiPoly scaled = cst(p, 6) * s + cst(p, 2) * t;
  CHECK(scaled.normalized() == s + cst(p, 9) * t);
  CHECK(scaled.leading_unit() == 6);
  CHECK(lambda.degree(polyalg::kVarS) == 3);
  CHECK(lambda.degree(polyalg::kVarX) == 0);
  CHECK(lambda.total_degree() == 3);
}

}  // TEST_SUITE
