#include <doctest.h>

#include "ck/geometric.hpp"
#include "ck/goncharov.hpp"
#include "ck/groebner.hpp"
#include "ck/polynomial.hpp"
#include "frozen.hpp"

using namespace ck;

namespace {

RingPtr two_block_ring() {
  return std::make_shared<const PolyRing>(std::vector<RingVariable>{{"x", 0, 1}, {"y", 1, 1}});
}

}  // namespace

TEST_CASE("polynomial arithmetic and parsing") {
  auto R = two_block_ring();
  auto x = Polynomial::variable(R, "x"), y = Polynomial::variable(R, "y");
  auto f = (x + y) * (x - y);
  CHECK(f == x.pow(2) - y.pow(2));
  CHECK(parse_polynomial(R, f.to_string()) == f);
  CHECK(parse_polynomial(R, "1/2*x*y - 3") == (x * y).scaled(Rational(1, 2)) - Polynomial::constant(R, 3));
  CHECK(f.leading_monomial() == Monomial{2, 0});
  CHECK(y.lowest_block() == 1);
}

TEST_CASE("Groebner basis and elimination") {
  auto R = two_block_ring();
  auto x = Polynomial::variable(R, "x"), y = Polynomial::variable(R, "y");
  auto one = Polynomial::constant(R, 1);
  auto g = groebner_basis({x * y - one, y.pow(2) - one});
  REQUIRE(g.complete);
  CHECK(normal_form(x - y, g.basis).is_zero());
  CHECK_FALSE(normal_form(x + y, g.basis).is_zero());
  auto elim = elimination_part(g.basis, 1);
  REQUIRE(elim.size() == 1);
  CHECK(elim[0] == y.pow(2) - one);
  // a budget of zero pairs leaves the basis incomplete
  auto partial = groebner_basis({x * y - one, y.pow(2) - one}, GroebnerBudget{0, 4000});
  CHECK_FALSE(partial.complete);
}

TEST_CASE("Goncharov dimensions are frozen and match the Hall oracle") {
  struct Case {
    std::vector<long> primes;
    std::vector<int> sigmas;
    const std::vector<int>* dims;
  };
  for (const auto& c : {Case{{2}, {3, 5}, &frozen::kDimsT2S3S5}, Case{{2, 3}, {}, &frozen::kDimsT2T3},
                        Case{{2, 3}, {3, 5}, &frozen::kDimsT2T3S3S5}}) {
    auto A = make_alphabet(Alphabet::taus_and_sigmas(c.primes, c.sigmas));
    GoncharovAlgebra G(A);
    for (int m = 1; m <= 6; ++m) {
      CHECK(G.generator_count(m) == (*c.dims)[m - 1]);
      CHECK(G.generator_count(m) == hall_oracle_dimension(*A, m));
    }
  }
}

TEST_CASE("image ideals") {
  CHECK(eliminate(ev_sharp(geometric_alphabet({2}, 2), 2)).generator_strings() == frozen::kIdealT2Depth2);
  CHECK(eliminate(ev_sharp(geometric_alphabet({}, 2), 2)).generator_strings() == frozen::kIdealEmptyDepth2);
  auto subst = ev_sharp(geometric_alphabet({2}, 4), 4);
  auto ideal = eliminate(subst);
  CHECK(ideal.generator_strings() == frozen::kIdealT2Depth4);
  for (const auto& f : ideal.generators) CHECK(vanishes_under_ev(ideal, subst, f));
  auto li3 = Polynomial::variable(ideal.ring, "Li3");
  CHECK_FALSE(vanishes_under_ev(ideal, subst, li3));
}

TEST_CASE("ideal serialization round-trips") {
  auto ideal = eliminate(ev_sharp(geometric_alphabet({2}, 4), 4));
  auto text = serialize_ideal(ideal);
  auto back = parse_ideal(text);
  CHECK(back.generator_strings() == ideal.generator_strings());
  CHECK(serialize_ideal(back) == text);
}
