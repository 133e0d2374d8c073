#include <doctest.h>

#include <random>

#include "ck/error.hpp"
#include "ck/linalg.hpp"

using namespace ck;

TEST_CASE("kernel and solve examples") {
  auto zero = RationalMatrix(2, 2, 0);
  CHECK(kernel_basis(zero).size() == 2);
  auto id = RationalMatrix::from_rows({{1, 0}, {0, 1}});
  CHECK(kernel_basis(id).empty());
  auto row = RationalMatrix::from_rows({{1, 1}});
  auto k = kernel_basis(row);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Rational>{-1, 1});
  auto m = RationalMatrix::from_rows({{1, 2}, {2, 4}});
  CHECK_FALSE(solve(m, std::vector<Rational>{1, 1}).has_value());
  auto x = solve(m, std::vector<Rational>{1, 2});
  REQUIRE(x);
  CHECK((*x)[0] + 2 * (*x)[1] == 1);
  CHECK_THROWS_AS(solve(m, std::vector<Rational>{1}), Error);
}

TEST_CASE("eps-independence examples") {
  const long p = 5;
  CHECK(eps_linearly_independent({{1, 0}, {0, 1}}, {p, 1}));
  CHECK_FALSE(eps_linearly_independent({{1, 0}, {Rational(power_of(p, 4)), 0}}, {p, 3}));
  CHECK(eps_linearly_independent({{1, 0}, {1, p}}, {p, 2}));
  CHECK_FALSE(eps_linearly_independent({{1, 0}, {1, p}}, {p, 1}));
}

TEST_CASE("pivoted eps-independence agrees with the lexicographic minor oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> small(-3, 3), expo(0, 3);
  const long p = 3;
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + trial % 3, n = d + trial % 2 + 1;
    std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(n));
    for (auto& r : rows)
      for (auto& e : r) e = Rational(small(rng)) * power_of(p, expo(rng));
    for (long N = 1; N <= 4; ++N)
      CHECK(eps_linearly_independent(rows, {p, N}) == eps_linearly_independent_by_minors(rows, {p, N}));
  }
}

TEST_CASE("perturbation threshold: identity and dependent input") {
  const long p = 5;
  Rational t = perturbation_threshold({{1, 0}, {0, 1}}, {p, 1});
  CHECK(t > 0);
  CHECK(t <= power_of(p, -1));
  CHECK(perturbation_threshold({{1}}, {p, 1}) <= power_of(p, -1));
  CHECK_THROWS_AS(perturbation_threshold({{1, 2}, {2, 4}}, {p, 3}), Error);
}

TEST_CASE("Gram projection round-trips and kills orthogonal parts") {
  std::vector<std::vector<Rational>> span{{1, 1, 0}, {0, 1, 1}};
  std::vector<Rational> target{2, 5, 3};  // 2 v1 + 3 v2
  CHECK(project_coefficients(target, span) == std::vector<Rational>{2, 3});
  std::vector<Rational> orth{1, -1, 1};
  auto c = project_coefficients(orth, span);
  CHECK(c == std::vector<Rational>{0, 0});
  std::vector<Rational> mixed{1 + Rational(1, 10), 1 - Rational(1, 10), Rational(1, 10)};  // v1 + orth/10
  CHECK(project_coefficients(mixed, span) == std::vector<Rational>{1, 0});
  CHECK_THROWS_AS(project_coefficients(target, {{1, 1, 0}, {2, 2, 0}}), Error);
}

TEST_CASE("approximate values track precision") {
  Approx a(5, Rational(1, 3), 10), b(5, 5, 3);
  CHECK((a + b).precision() == 3);
  CHECK((a * b).precision() == 3);  // min(10 + v(b), 3 + v(a))
  CHECK(Approx(5, 25, 2).valuation() >= 2);
  CHECK_FALSE(Approx(5, 25, 2).is_determined());
  CHECK(Approx(5, 7).is_exact());
}
