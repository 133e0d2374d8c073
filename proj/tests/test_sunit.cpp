#include <doctest.h>

#include "ck/error.hpp"
#include "ck/sunit.hpp"
#include "oracles.hpp"

using namespace ck;

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK(next_prime(7) == 11);
  CHECK(prev_prime(7) == 5);
  CHECK(prev_prime(2) == 0);
  CHECK(primes_up_to(12) == std::vector<long>{2, 3, 5, 7, 11});
}

TEST_CASE("scheme parsing") {
  auto Z = OpenIntegerScheme::parse("Z");
  CHECK(Z.excluded_primes().empty());
  CHECK(Z.largest_excluded_or_two() == 2);
  auto Z6 = OpenIntegerScheme::parse("Z[1/2,1/3]");
  CHECK(Z6.excluded_primes() == std::vector<long>{2, 3});
  CHECK(Z6.is_unit(Rational(-9, 16)));
  CHECK_FALSE(Z6.is_unit(Rational(5)));
  auto T = OpenIntegerScheme::parse("Z>5");
  CHECK(T.excluded_primes() == std::vector<long>{2, 3, 5});
  CHECK(OpenIntegerScheme::parse(T.to_string()) == T);
  CHECK_THROWS_AS(OpenIntegerScheme::parse("Z[1/4]"), Error);
  CHECK_THROWS_AS(OpenIntegerScheme::parse("Q"), Error);
}

TEST_CASE("point enumeration agrees with brute force") {
  for (auto primes : std::vector<std::vector<long>>{{}, {2}, {3}, {2, 3}, {2, 5}}) {
    for (long b : {10L, 40L}) {
      auto got = enumerate_points(OpenIntegerScheme::excluding(primes), b);
      auto want = oracle::s_unit_points(primes, b);
      CHECK(got.size() == want.size());
      for (const auto& z : want) {
        bool found = false;
        for (const auto& g : got) found = found || g.value == z;
        CHECK(found);
      }
      for (std::size_t i = 1; i < got.size(); ++i) CHECK(height(got[i - 1].value) <= height(got[i].value));
    }
  }
}

TEST_CASE("classical answers") {
  auto half = enumerate_points(OpenIntegerScheme::parse("Z[1/2]"), 1000);
  REQUIRE(half.size() == 3);
  CHECK(half[0].value == -1);
  CHECK(enumerate_points(OpenIntegerScheme::parse("Z"), 1000).empty());
  CHECK(enumerate_points(OpenIntegerScheme::parse("Z[1/3]"), 1000).empty());
  auto z = SUnitPoint::make(Rational(9, 8), {2, 3});
  CHECK(z.val_z == std::vector<long>{-3, 2});
  CHECK(z.val_one_minus == std::vector<long>{-3, 0});
  CHECK_THROWS_AS(valuation_vector(Rational(5), {2, 3}), Error);
}
