#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "posetpack/bignat.hpp"
#include "posetpack/errors.hpp"
#include "posetpack/rational.hpp"

using posetpack::BigNat;
using posetpack::BigRat;

TEST_CASE("small arithmetic matches machine integers") {
  std::mt19937_64 rng(12345);
  for (int round = 0; round < 2000; ++round) {
    std::uint64_t a = rng() >> (2 + rng() % 40);
    std::uint64_t b = rng() >> (2 + rng() % 40);
    CHECK((BigNat{a} + BigNat{b}).to_string() == std::to_string(a + b));
    if (a < (std::uint64_t{1} << 32) && b < (std::uint64_t{1} << 32)) {
      CHECK((BigNat{a} * BigNat{b}).to_u64() == a * b);
    }
    if (b != 0) {
      auto [q, r] = BigNat::divmod(BigNat{a}, BigNat{b});
      CHECK(q.to_u64() == a / b);
      CHECK(r.to_u64() == a % b);
    }
  }
}

TEST_CASE("addition carries across limbs") {
  BigNat x = BigNat::pow(BigNat{2}, 64) - BigNat{1};
  CHECK((x + BigNat{1}).to_string() == "18446744073709551616");
}

TEST_CASE("subtraction below zero throws") {
  CHECK_THROWS_AS(BigNat{3} - BigNat{5}, posetpack::RangeError);
}

TEST_CASE("factorials and binomials") {
  CHECK(BigNat::factorial(0).to_u64() == 1);
  CHECK(BigNat::factorial(10).to_u64() == 3628800);
  CHECK(BigNat::factorial(20).to_string() == "2432902008176640000");
  CHECK(BigNat::factorial(30).to_string() == "265252859812191058636308480000000");
  CHECK(BigNat::binomial(10, 5).to_u64() == 252);
  CHECK(BigNat::binomial(4, 7).is_zero());
  CHECK(BigNat::binomial(100, 50).to_string() ==
        "100891344545564193334812497256");
}

TEST_CASE("decimal round trip") {
  const std::string digits = "98765432109876543210123456789";
  CHECK(BigNat::from_decimal(digits).to_string() == digits);
  CHECK(BigNat::from_decimal("0").is_zero());
  CHECK_THROWS_AS(BigNat::from_decimal("12x4"), posetpack::ParseError);
}

TEST_CASE("gcd") {
  CHECK(BigNat::gcd(BigNat{12}, BigNat{18}).to_u64() == 6);
  CHECK(BigNat::gcd(BigNat::factorial(25), BigNat::factorial(23)) ==
        BigNat::factorial(23));
}

TEST_CASE("rationals reduce and compare exactly") {
  BigRat half(1, 2), third(1, 3);
  CHECK(half > third);
  CHECK((half + third).to_fraction_string() == "5/6");
  CHECK((half * third).to_fraction_string() == "1/6");
  CHECK(BigRat(6, 4) == BigRat(3, 2));
  CHECK(BigRat(0, 7).to_fraction_string() == "0");
  CHECK_THROWS_AS(BigRat(BigNat{1}, BigNat{0}), posetpack::RangeError);
}

TEST_CASE("six significant digit rendering") {
  CHECK(BigRat(1, 3).to_decimal_string() == "0.333333");
  CHECK(BigRat(2, 3).to_decimal_string() == "0.666667");
  CHECK(BigRat(1, 2).to_decimal_string() == "0.5");
  CHECK(BigRat(252, 1).to_decimal_string() == "252");
  CHECK(BigRat(1, 1000000).to_decimal_string() == "1e-6");
  CHECK(BigRat(BigNat::binomial(100, 50), BigNat{1}).to_decimal_string() ==
        "1.00891e+29");
  CHECK(BigRat(999999999, 1000000000).to_decimal_string() == "1");
}
