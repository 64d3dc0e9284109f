#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "ecdiv/division.hpp"
#include "ecdiv/resolvent.hpp"
#include "ecdiv/supersingular.hpp"
#include "ecdiv/theta.hpp"
#include "polyalg/rational_function.hpp"

using ecdiv::DivisionPolySet;
using polyalg::MultiPoly;
using polyalg::RationalFunction;

namespace {

MultiPoly var_s(int64_t p) { return MultiPoly::variable(p, polyalg::kVarS); }
MultiPoly var_t(int64_t p) { return MultiPoly::variable(p, polyalg::kVarT); }
MultiPoly var_x(int64_t p) { return MultiPoly::variable(p, polyalg::kVarX); }
MultiPoly cst(int64_t p, int64_t c) { return MultiPoly::constant(p, c); }

int64_t invmod(int64_t a, int64_t p) {
  int64_t result = 1;
  int64_t base = ((a % p) + p) % p;
  for (int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = (result * base) % p;
    base = (base * base) % p;
  }
  return result;
}

MultiPoly printed_psi3(int64_t p) {
  MultiPoly s = var_s(p);
  MultiPoly t = var_t(p);
  MultiPoly x = var_x(p);
  return cst(p, 3) * x.pow(4) + cst(p, 6) * s * x.pow(2) + cst(p, 12) * t * x - s * s;
}

}  // namespace

TEST_SUITE("ecdiv") {

TEST_CASE("division polynomial seeds match the printed quartic") {
  for (int64_t p : {5, 7, 13}) {
    DivisionPolySet set = ecdiv::division_polynomials(p, 4);
    CHECK(set.x_part(1) == cst(p, 1));
    CHECK(set.x_part(2) == cst(p, 2));
    CHECK(set.psi(2).times_y);
    CHECK_FALSE(set.psi(3).times_y);
    CHECK(set.x_part(3) == printed_psi3(p));
    CHECK(set.x_part(0).is_zero());
  }
  CHECK_THROWS_AS(ecdiv::division_polynomials(5, 51), ecdiv::BoundExceeded);
  CHECK_THROWS_AS(ecdiv::division_polynomials(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(ecdiv::division_polynomials(5, 0), std::invalid_argument);
}

TEST_CASE("degrees and leading coefficients away from the characteristic") {
  for (int64_t p : {5, 7, 13}) {
    DivisionPolySet set = ecdiv::division_polynomials(p, 13);
    for (int m = 2; m <= 13; ++m) {
      if (m % static_cast<int>(p) == 0) continue;
      const MultiPoly& q = set.x_part(m);
      int expected_deg = (m % 2 == 1) ? (m * m - 1) / 2 : (m * m - 4) / 2;
      CHECK(q.degree(polyalg::kVarX) == expected_deg);
      MultiPoly lead = q.coeff_of(polyalg::kVarX, expected_deg);
      CHECK(lead == cst(p, m));
    }
  }
}

TEST_CASE("the characteristic index drops the degree to p(p-1)/2") {
  for (int64_t p : {5, 7, 11, 13}) {
    DivisionPolySet set = ecdiv::division_polynomials(p, static_cast<int>(p));
    CHECK(set.x_part(static_cast<int>(p)).degree(polyalg::kVarX) == p * (p - 1) / 2);
  }
}

TEST_CASE("psi_5 over F_5 equals the frozen hand computation") {
  DivisionPolySet set = ecdiv::division_polynomials(5, 5);
  int64_t p = 5;
  MultiPoly s = var_s(p);
  MultiPoly t = var_t(p);
  MultiPoly x = var_x(p);
  MultiPoly expected = cst(p, 2) * s * x.pow(10) + cst(p, 4) * s * s * t * x.pow(5) +
                       s.pow(6) + cst(p, 3) * s.pow(3) * t * t + cst(p, 4) * t.pow(4);
  CHECK(set.x_part(5) == expected);
}

TEST_CASE("the x-part recurrences agree with direct elimination of y") {
  for (int64_t p : {5, 7, 13}) {
    DivisionPolySet fast = ecdiv::division_polynomials(p, 13);
    DivisionPolySet direct = ecdiv::division_polynomials_direct(p, 13);
    for (int m = 0; m <= 13; ++m) {
      CHECK(fast.x_part(m) == direct.x_part(m));
    }
  }
}

TEST_CASE("the net addition identity holds in the y-eliminated ring") {
  for (int64_t p : {5, 7}) {
    DivisionPolySet set = ecdiv::division_polynomials(p, 13);
    for (int m = 2; m <= 8; ++m) {
      for (int n = 1; n < m && m + n <= 12; ++n) {
        MultiPoly lhs = ecdiv::eliminate_z_square(ecdiv::psi_with_z(set, m + n) *
                                                  ecdiv::psi_with_z(set, m - n));
        MultiPoly rhs = ecdiv::eliminate_z_square(
            ecdiv::psi_with_z(set, m + 1) * ecdiv::psi_with_z(set, m - 1) *
                ecdiv::psi_with_z(set, n) * ecdiv::psi_with_z(set, n) -
            ecdiv::psi_with_z(set, n + 1) * ecdiv::psi_with_z(set, n - 1) *
                ecdiv::psi_with_z(set, m) * ecdiv::psi_with_z(set, m));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("theta extraction reads the arithmetic progression of coefficients") {
  ecdiv::Theta th5 = ecdiv::theta_extract(5);
  int64_t p = 5;
  MultiPoly s = var_s(p);
  MultiPoly t = var_t(p);
  CHECK(th5.a.size() == 3);
  CHECK(th5.a[0] == cst(p, 2) * s);
  CHECK(th5.a[1] == cst(p, 4) * s * s * t);
  CHECK(th5.a[2] == s.pow(6) + cst(p, 3) * s.pow(3) * t * t + cst(p, 4) * t.pow(4));
  CHECK(th5.theta.degree(polyalg::kVarBigX) == 2);

  CHECK(ecdiv::theta_extract(7).theta.degree(polyalg::kVarBigX) == 3);
  ecdiv::Theta th13 = ecdiv::theta_extract(13);
  CHECK(th13.theta.degree(polyalg::kVarBigX) == 6);
  CHECK(th13.a.size() == 7);

  for (int64_t q : {5, 7, 11, 13}) {
    CHECK_FALSE(ecdiv::theta_extract(q).a.front().is_zero());
  }
  CHECK_THROWS_AS(ecdiv::theta_extract(17), std::invalid_argument);
  CHECK_THROWS_AS(ecdiv::theta_extract(4), std::invalid_argument);
}

TEST_CASE("psi_p is theta composed with the Frobenius of x") {
  for (int64_t p : {5, 7, 11, 13}) {
    ecdiv::Theta th = ecdiv::theta_extract(p);
    DivisionPolySet set = ecdiv::division_polynomials(p, static_cast<int>(p));
    MultiPoly composed = th.theta.substitute(
        polyalg::kVarBigX, var_x(p).pow(static_cast<uint32_t>(p)));
    CHECK(composed == set.x_part(static_cast<int>(p)));
  }
}

TEST_CASE("the radical in x strips multiplicities including p-th powers") {
  int64_t p = 5;
  MultiPoly s = var_s(p);
  MultiPoly t = var_t(p);
  MultiPoly x = var_x(p);

  MultiPoly f = (x - s) * (x - s) * (x - t);
  CHECK(ecdiv::radical_in_x(f) == (x - s) * (x - t));

  MultiPoly g = (x + s).pow(5);
  CHECK(ecdiv::radical_in_x(g) == x + s);

  CHECK(ecdiv::radical_in_x(x.pow(5)) == x);
  CHECK(ecdiv::radical_in_x(s * s + t) == cst(p, 1));
  CHECK(ecdiv::radical_in_x((x * x - t).pow(5) * (x - s)) == (x * x - t) * (x - s));
  CHECK_THROWS_AS(ecdiv::radical_in_x(MultiPoly(p)), std::invalid_argument);
}

TEST_CASE("theta is the scaled Frobenius twist of the separable radical") {
  ecdiv::ThetaRadicalReport r5 = ecdiv::theta_radical_check(5);
  CHECK(r5.radical_degree == 2);
  ecdiv::ThetaRadicalReport r7 = ecdiv::theta_radical_check(7);
  CHECK(r7.radical_degree == 3);

  DivisionPolySet set5 = ecdiv::division_polynomials(5, 3);
  CHECK_THROWS_AS(ecdiv::theta_radical_check_with(5, set5.x_part(3)),
                  ecdiv::RadicalDegreeMismatch);
  CHECK_THROWS_AS(ecdiv::theta_radical_check(11), std::invalid_argument);
}

TEST_CASE("mu matches the quadratic discriminant identity at p = 5") {
  RationalFunction mu = ecdiv::mu_discriminant(5);
  ecdiv::Theta th = ecdiv::theta_extract(5);
  RationalFunction b(th.a[1], th.a[0]);
  RationalFunction c(th.a[2], th.a[0]);
  RationalFunction expected = b * b - RationalFunction::constant(5, 4) * c;
  CHECK(mu == expected);
  CHECK_FALSE(mu.is_zero());
}

TEST_CASE("mu is nonzero at p = 13 and rejects p = 7") {
  RationalFunction mu = ecdiv::mu_discriminant(13);
  CHECK_FALSE(mu.is_zero());
  CHECK_THROWS_AS(ecdiv::mu_discriminant(7), std::invalid_argument);
}

TEST_CASE("three-torsion resolvent coefficients match for every p") {
  for (int64_t p : {5, 7, 11, 13}) {
    ecdiv::ThreeTorsionResolvent r = ecdiv::three_torsion_resolvent(p);
    MultiPoly s = var_s(p);
    MultiPoly t = var_t(p);
    int64_t i3 = invmod(3, p);
    int64_t i27 = invmod(27, p);
    CHECK(r.c1 == cst(p, 2) * s);
    CHECK(r.c2 == (s * s).scale(4 * i3 % p));
    CHECK(r.c3 == s.pow(3).scale(8 * i3 % p) + (t * t).scale(16));
    CHECK(r.shifted_t2.is_zero());
    CHECK(r.shifted_t1.is_zero());
    MultiPoly lambda = cst(p, 4) * s.pow(3) + cst(p, 27) * t * t;
    CHECK(r.shifted_t0 == lambda.scale(16 * i27 % p));
  }
}

TEST_CASE("supersingular j-invariants by point counting") {
  CHECK(ecdiv::supersingular_j_list(5) == std::vector<int64_t>{0});
  CHECK(ecdiv::supersingular_j_list(7) == std::vector<int64_t>{6});
  CHECK(ecdiv::supersingular_j_list(11) == std::vector<int64_t>{0, 1});
  CHECK(ecdiv::supersingular_j_list(13) == std::vector<int64_t>{5});
  CHECK(ecdiv::supersingular_j_list(17) == std::vector<int64_t>{0, 8});
  CHECK(ecdiv::supersingular_j_list(19) == std::vector<int64_t>{7, 18});
  CHECK(ecdiv::supersingular_j_list(23) == std::vector<int64_t>{0, 3, 19});
  CHECK(ecdiv::supersingular_j_list(29) == std::vector<int64_t>{0, 2, 25});
  CHECK(ecdiv::supersingular_j_list(31) == std::vector<int64_t>{2, 4, 23});
  CHECK(ecdiv::supersingular_j_list(37) == std::vector<int64_t>{8});
  CHECK(ecdiv::supersingular_j_list(41) == std::vector<int64_t>{0, 3, 28, 32});
  CHECK(ecdiv::supersingular_j_list(43) == std::vector<int64_t>{8, 41});
  CHECK(ecdiv::supersingular_j_list(47) ==
        std::vector<int64_t>{0, 9, 10, 36, 44});

  for (int64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    std::vector<int64_t> list = ecdiv::supersingular_j_list(p);
    int64_t count = static_cast<int64_t>(list.size());
    // The count of all supersingular j (living in F_{p^2}) is floor(p/12)
    // plus 0..2, and a supersingular curve over F_p always exists, so the
    // F_p-rational list is nonempty and never exceeds the global count.  The
    // global lower bound does not descend to F_p: at p = 37 and p = 43 some
    // supersingular j form conjugate pairs outside F_p.
    CHECK(count >= 1);
    CHECK(count <= p / 12 + 2);

    // Classical complex-multiplication facts pin the two special values:
    // j = 0 is supersingular exactly for p = 2 mod 3, j = 1728 exactly for
    // p = 3 mod 4.
    bool has_zero = false;
    bool has_1728 = false;
    for (int64_t j : list) {
      if (j == 0) has_zero = true;
      if (j == 1728 % p) has_1728 = true;
    }
    CHECK(has_zero == (p % 3 == 2));
    CHECK(has_1728 == (p % 4 == 3));
  }
}

TEST_CASE("frobenius traces satisfy the Hasse bound") {
  for (int64_t p : {5, 13}) {
    for (int64_t a = 0; a < p; ++a) {
      for (int64_t b = 0; b < p; ++b) {
        if ((4 * a * a * a + 27 * b * b) % p == 0) continue;
        int64_t trace = ecdiv::frobenius_trace(p, a, b);
        CHECK(trace * trace <= 4 * p);
      }
    }
  }
  CHECK_THROWS_AS(ecdiv::frobenius_trace(5, 0, 0), std::invalid_argument);
}

}  // TEST_SUITE
