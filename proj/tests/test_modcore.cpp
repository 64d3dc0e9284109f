#include <doctest.h>

#include <numeric>
#include <set>

#include "modcore/rational.hpp"
#include "modcore/residue.hpp"
#include "support/rng.hpp"

using modcore::RationalNumber;
using modcore::ResidueInt;

TEST_SUITE("modcore") {

TEST_CASE("residues are stored canonically") {
  CHECK(ResidueInt(-1, 5).value() == 4);
  CHECK(ResidueInt(17, 5).value() == 2);
  CHECK(ResidueInt(0, 1).value() == 0);
  CHECK(ResidueInt(42, 1).value() == 0);
  CHECK_THROWS_AS(ResidueInt(0, 0), std::invalid_argument);
}

TEST_CASE("mixed-modulus arithmetic is rejected") {
  ResidueInt a(1, 5), b(1, 7);
  CHECK_THROWS_AS(a + b, modcore::ModulusMismatch);
  CHECK_THROWS_AS(a * b, modcore::ModulusMismatch);
}

TEST_CASE("crt_combine on the pinned examples") {
  ResidueInt r = modcore::crt_combine({ResidueInt(1, 2), ResidueInt(2, 3)});
  CHECK(r.value() == 5);
  CHECK(r.modulus() == 6);

  r = modcore::crt_combine({ResidueInt(0, 4), ResidueInt(0, 9)});
  CHECK(r.value() == 0);
  CHECK(r.modulus() == 36);

  CHECK_THROWS_AS(modcore::crt_combine({ResidueInt(3, 4), ResidueInt(3, 6)}),
                  modcore::NonCoprimeModuli);
  CHECK_THROWS_AS(modcore::crt_combine({}), modcore::EmptyInput);
}

TEST_CASE("crt_combine is a bijection for coprime m*n <= 1000") {
  for (int64_t m = 1; m <= 40; ++m) {
    for (int64_t n = m; m * n <= 1000; ++n) {
      if (std::gcd(m, n) != 1) continue;
      std::set<int64_t> images;
      for (int64_t a = 0; a < m; ++a) {
        for (int64_t b = 0; b < n; ++b) {
          ResidueInt x = modcore::crt_combine({ResidueInt(a, m), ResidueInt(b, n)});
          REQUIRE(x.modulus() == m * n);
          REQUIRE(x.value() % m == a);
          REQUIRE(x.value() % n == b);
          images.insert(x.value());
        }
      }
      REQUIRE(images.size() == static_cast<size_t>(m * n));
    }
  }
}

TEST_CASE("unit_group matches the pinned examples") {
  auto u5 = modcore::unit_group(5);
  REQUIRE(u5.size() == 4);
  for (size_t i = 0; i < u5.size(); ++i) CHECK(u5[i].value() == static_cast<int64_t>(i + 1));

  auto u1 = modcore::unit_group(1);
  REQUIRE(u1.size() == 1);
  CHECK(u1[0].value() == 0);

  CHECK(modcore::unit_group(25).size() == 20);
}

TEST_CASE("unit_group is closed under product and inverse for M <= 100") {
  for (int64_t m = 1; m <= 100; ++m) {
    auto units = modcore::unit_group(m);
    std::set<int64_t> vals;
    for (const auto& u : units) vals.insert(u.value());
    for (const auto& a : units) {
      REQUIRE(vals.count((a * a).value()) == 1);
      REQUIRE(vals.count(a.inverse().value()) == 1);
      REQUIRE((a * a.inverse()).value() == (m == 1 ? 0 : 1));
    }
    // spot-check closure under distinct products on a stride to keep it quick
    for (size_t i = 0; i < units.size(); i += 3) {
      for (size_t j = 0; j < units.size(); j += 7) {
        REQUIRE(vals.count((units[i] * units[j]).value()) == 1);
      }
    }
  }
}

TEST_CASE("inverse_mod on the pinned examples") {
  CHECK(modcore::inverse_mod(ResidueInt(11, 13)).value() == 6);
  CHECK(modcore::inverse_mod(ResidueInt(1, 9)).value() == 1);
  CHECK_THROWS_AS(modcore::inverse_mod(ResidueInt(2, 4)), modcore::NotAUnit);
}

TEST_CASE("rationals normalize and order by cross-multiplication") {
  CHECK(RationalNumber(2, 4) == RationalNumber(1, 2));
  CHECK(RationalNumber(1, -2) == RationalNumber(-1, 2));
  CHECK(RationalNumber(0, 7) == RationalNumber(0));
  CHECK_THROWS_AS(RationalNumber(1, 0), std::invalid_argument);

  support::SplitMix64 rng(0x5eed);
  for (int iter = 0; iter < 2000; ++iter) {
    int64_t a = rng.range(-50, 50), b = rng.range(-50, 50);
    int64_t n = rng.range(1, 40), m = rng.range(1, 40);
    RationalNumber x(a, n), y(b, m);
    CHECK((x <= y) == (m * a <= n * b));
    CHECK((x < y) == !(y <= x));
    // strict total order: exactly one of <, ==, > holds
    int hits = (x < y ? 1 : 0) + (x == y ? 1 : 0) + (y < x ? 1 : 0);
    CHECK(hits == 1);
  }
}

TEST_CASE("rational arithmetic stays exact") {
  RationalNumber twothirds(2, 3), half(1, 2);
  CHECK((twothirds + half) == RationalNumber(7, 6));
  CHECK((twothirds - half) == RationalNumber(1, 6));
  CHECK((twothirds * half) == RationalNumber(1, 3));
  CHECK((-twothirds) == RationalNumber(-2, 3));
  CHECK(RationalNumber(7, 6).str() == "7/6");
  CHECK(RationalNumber(-3, 1).str() == "-3");
}

}  // TEST_SUITE
