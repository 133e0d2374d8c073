#include <doctest.h>

#include <random>

#include "ck/error.hpp"
#include "ck/padic.hpp"
#include "ck/polylog.hpp"
#include "ck/series.hpp"
#include "oracles.hpp"

using namespace ck;

namespace {

PadicNumber Q(long p, const Rational& x, long N = 30) { return PadicNumber::from_rational(p, x, N); }

PadicSeries polynomial(long p, const std::vector<Rational>& c) {
  std::vector<PadicNumber> coeffs;
  for (const auto& x : c) coeffs.push_back(x == 0 ? PadicNumber::zero(p, 1L << 40) : Q(p, x, 40));
  return PadicSeries(Q(p, 0, 40), coeffs, TailBound{1L << 30, 0});
}

}  // namespace

TEST_CASE("arithmetic precision contract against exact rationals") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-2000, 2000), den(1, 300);
  for (long p : {3L, 5L, 7L}) {
    for (int i = 0; i < 200; ++i) {
      Rational a(num(rng), den(rng)), b(num(rng), den(rng));
      a.canonicalize();
      b.canonicalize();
      if (a == 0 || b == 0) continue;
      const long N = 12;
      auto A = Q(p, a, N), B = Q(p, b, N);
      auto check = [&](const PadicNumber& got, const Rational& exact) {
        if (exact == 0) return;
        CHECK(got.agrees_with(Q(p, exact, got.precision() + 5), got.precision()));
      };
      check(A + B, a + b);
      check(A - B, a - b);
      check(A * B, a * b);
      check(A / B, a / b);
    }
  }
}

TEST_CASE("digits round-trip and Teichmueller points") {
  auto x = Q(7, Rational(-22, 49), 10);
  CHECK(PadicNumber::from_digits(7, x.valuation(), x.unit_digits(), x.precision()) == x);
  auto w = teichmuller(5, 2, 20);
  CHECK(w.pow(4).agrees_with(Q(5, 1, 20), 20));
}

TEST_CASE("logarithm: branch and series oracle") {
  CHECK(padic_log(5, -1, 20).is_zero());
  CHECK(padic_log(5, 5, 20).is_zero());
  // log_5(6) = log(1 + 5)
  auto got = padic_log(5, 6, 10);
  CHECK(got.agrees_with(Q(5, oracle::log1p_series(5, 5, 10), 30), 10));
}

TEST_CASE("log is a homomorphism on random units") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(1, 10000);
  for (long p : {5L, 7L})
    for (int i = 0; i < 500; ++i) {
      Rational a(d(rng), d(rng)), b(-d(rng), d(rng));
      a.canonicalize();
      b.canonicalize();
      CHECK(padic_log(p, a * b, 20).agrees_with(padic_log(p, a, 20) + padic_log(p, b, 20), 20));
    }
}

TEST_CASE("polylog basics") {
  CHECK(padic_polylog(3, 5, 0, 20).is_zero());
  // Li_1(z) = -log(1 - z) for |z| < 1
  CHECK(padic_polylog(1, 5, Rational(10, 3), 20).agrees_with(-padic_log(5, Rational(1) - Rational(10, 3), 20), 20));
  CHECK_THROWS_AS(padic_polylog(2, 5, 6, 20), Error);  // residue disk of 1
}

TEST_CASE("distribution relation on small z") {
  for (long p : {5L, 7L})
    for (int n = 1; n <= 4; ++n)
      for (long k : {1L, 2L, -3L})
        for (long den : {1L, 2L}) {
          Rational z(k * p, den);
          auto lhs = padic_polylog(n, p, z * z, 20);
          auto rhs = (padic_polylog(n, p, z, 20) + padic_polylog(n, p, -z, 20)).mul_rational(Rational(1 << (n - 1)));
          CHECK(lhs.agrees_with(rhs, 20));
        }
}

TEST_CASE("inversion identity on units") {
  for (long p : {5L, 7L})
    for (Rational z : {Rational(2), Rational(3), Rational(-2), Rational(2, 3)}) {
      if (oracle::valuation(z - 1, p) > 0) continue;
      auto s = padic_polylog(2, p, z, 15) + padic_polylog(2, p, 1 / z, 15);
      auto l = padic_log(p, -z, 15);
      CHECK((s + (l * l).mul_rational(Rational(1, 2))).valuation() >= 10);
    }
}

TEST_CASE("zeta values: nonvanishing, two routes, even rejected") {
  for (long p : {5L, 7L}) {
    auto a = padic_zeta(3, p, 20);
    CHECK_FALSE(a.is_zero());
    CHECK(a.valuation() < 20);
    CHECK(a.agrees_with(padic_zeta_distribution(3, p, 20), 15));
  }
  CHECK_THROWS_AS(padic_zeta(2, 5, 10), Error);
}

TEST_CASE("disk series agree with direct evaluation") {
  const long p = 7, N = 20;
  auto y = Q(p, 3, N);
  auto log_series = expand_log_series(y, 30, N);
  auto li2 = expand_polylog_series(2, y, 30, N);
  for (long j : {7L, 14L, -21L, 49L}) {
    auto t = Q(p, j, N);
    CHECK(log_series.evaluate(t).agrees_with(padic_log(p, 3 + j, N), 15));
    CHECK(li2.evaluate(t).agrees_with(padic_polylog(2, p, 3 + j, N), 15));
  }
}

TEST_CASE("Newton polygon root counts") {
  const long p = 5;
  auto f1 = polynomial(p, {-p, 1});  // t - p
  CHECK(newton_root_count(f1, 1).verdict == RootVerdict::AtMost);
  auto f2 = polynomial(p, {-p, 0, 1});  // t^2 - p: no roots in Z_p
  auto r2 = newton_root_count(f2, 0);
  CHECK(r2.verdict == RootVerdict::AtMost);
  CHECK(r2.count == 0);
  auto f3 = polynomial(p, {0, -1, 1});  // t(t - 1)
  CHECK(newton_root_count(f3, 1).verdict == RootVerdict::AtMost);
  CHECK(newton_root_count(f3, 0).verdict == RootVerdict::TooMany);
  auto f4 = polynomial(p, {1, 1});
  CHECK(newton_root_count(f4, 0).count == 0);
}
