#include <doctest.h>

#include "ck/error.hpp"
#include "ck/linalg.hpp"
#include "ck/shuffle.hpp"
#include "oracles.hpp"

using namespace ck;

namespace {

AlphabetPtr two_taus() { return make_alphabet(Alphabet::taus_and_sigmas({2, 3}, {})); }

std::string letters_of(const Alphabet& a, const Word& w) {
  std::string s;
  for (int l : w.letters()) s += static_cast<char>('a' + l);
  (void)a;
  return s;
}

}  // namespace

TEST_CASE("shuffle of words agrees with the recursive oracle") {
  auto A = two_taus();
  for (int m = 0; m <= 3; ++m)
    for (int k = 0; k <= 3; ++k) {
      auto left = m == 0 ? std::vector<Word>{Word()} : words_of_weight(*A, m);
      auto right = k == 0 ? std::vector<Word>{Word()} : words_of_weight(*A, k);
      for (const auto& u : left)
        for (const auto& v : right) {
          auto got = shuffle_words(*A, u, v);
          auto want = oracle::shuffle(letters_of(*A, u), letters_of(*A, v));
          REQUIRE(got.size() == want.size());
          for (const auto& [w, c] : got) CHECK(want.at(letters_of(*A, w)) == c);
        }
    }
}

TEST_CASE("shuffle product is commutative and associative with unit") {
  auto A = two_taus();
  auto x = ShuffleElement::word(A, parse_word(*A, "t2.t3"), 2) + ShuffleElement::word(A, parse_word(*A, "t3"));
  auto y = ShuffleElement::word(A, parse_word(*A, "t3.t3"), Rational(-1, 2));
  auto z = ShuffleElement::word(A, parse_word(*A, "t2"));
  CHECK(shuffle_product(x, y) == shuffle_product(y, x));
  CHECK(shuffle_product(shuffle_product(x, y), z) == shuffle_product(x, shuffle_product(y, z)));
  CHECK(shuffle_product(x, ShuffleElement::unit(A)) == x);
  CHECK(shuffle_power(z, 3) == ShuffleElement::word(A, parse_word(*A, "t2.t2.t2"), 6));
}

TEST_CASE("mixing alphabets is rejected") {
  auto A = two_taus();
  auto B = make_alphabet(Alphabet::taus_and_sigmas({2}, {}));
  CHECK_THROWS_AS(shuffle_product(ShuffleElement::unit(A), ShuffleElement::unit(B)), Error);
}

TEST_CASE("coproduct: coassociativity and counit") {
  auto A = two_taus();
  for (const auto& w : words_up_to_weight(*A, 4)) {
    auto x = ShuffleElement::word(A, w, 3);
    auto D = deconcat_coproduct(x);
    CHECK(coproduct_left(D) == coproduct_right(D));
    // (eps (x) id) D = x
    ShuffleElement back(A);
    for (const auto& [k, c] : D.terms())
      if (k.first.empty()) back.add(k.second, c);
    CHECK(back == x);
  }
}

TEST_CASE("pairing duality <x y, w> = <x (x) y, mu(w)>") {
  auto A = two_taus();
  for (int m = 1; m <= 2; ++m)
    for (int k = 1; k <= 2; ++k)
      for (const auto& u : words_of_weight(*A, m))
        for (const auto& v : words_of_weight(*A, k)) {
          auto x = ShuffleElement::word(A, u), y = ShuffleElement::word(A, v);
          auto xy = shuffle_product(x, y);
          for (const auto& w : words_of_weight(*A, m + k))
            CHECK(pairing(xy, w) == pairing(tensor(x, y), unshuffle(*A, w)));
        }
}

TEST_CASE("reduced coproduct of Li_n matches the closed form") {
  for (int n = 2; n <= 6; ++n) CHECK(reduced_coproduct_polylog(n) == polylog_coproduct_formula(n));
}

TEST_CASE("Lyndon monomials give a basis of each weight (Radford)") {
  auto A = two_taus();
  for (int m = 1; m <= 4; ++m) {
    auto basis = monomial_basis(A, m);
    auto words = words_of_weight(*A, m);
    CHECK(basis.size() == words.size());
    std::vector<std::vector<Rational>> rows;
    for (const auto& b : basis) {
      std::vector<Rational> r;
      for (const auto& w : words) r.push_back(b.coefficient(w));
      rows.push_back(r);
    }
    CHECK(rank(RationalMatrix::from_rows(rows)) == words.size());
  }
}

TEST_CASE("serialization round-trip") {
  auto A = make_alphabet(Alphabet::taus_and_sigmas({2}, {3}));
  auto x = ShuffleElement::word(A, parse_word(*A, "t2.s3"), Rational(-3, 7)) + ShuffleElement::word(A, Word(), 2);
  CHECK(from_pairs(A, to_pairs(x)) == x);
}
