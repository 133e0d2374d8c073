#include <doctest.h>

#include <set>

#include "ck/error.hpp"
#include "ck/word.hpp"
#include "oracles.hpp"

using namespace ck;

TEST_CASE("alphabet ordering and names") {
  Alphabet a({sigma(3), tau(3), tau(2)});
  REQUIRE(a.size() == 3);
  CHECK(a[0].name() == "t2");
  CHECK(a[1].name() == "t3");
  CHECK(a[2].name() == "s3");
  CHECK(a.index_of_name("s3") == 2);
  CHECK(a.weight(2) == 3);
  CHECK_THROWS_AS(Alphabet({tau(2), tau(2)}), Error);
  CHECK_THROWS_AS(sigma(4), Error);
}

TEST_CASE("words: weight, order, parsing") {
  auto a = Alphabet::taus_and_sigmas({2}, {3});
  Word w = parse_word(a, "t2.s3");
  CHECK(w.weight() == 4);
  CHECK(w.length() == 2);
  CHECK(format_word(a, w) == "t2.s3");
  CHECK(parse_word(a, "").empty());
  CHECK_THROWS_AS(parse_word(a, "t5"), Error);
  // weight first, then lexicographic
  CHECK(parse_word(a, "t2.t2.t2") < parse_word(a, "s3.t2"));
  CHECK(parse_word(a, "t2.s3") < parse_word(a, "s3.t2"));
}

TEST_CASE("words of a given weight are complete and sorted") {
  auto a = Alphabet::taus_and_sigmas({2, 3}, {3});
  for (int m = 1; m <= 5; ++m) {
    auto ws = words_of_weight(a, m);
    CHECK(std::is_sorted(ws.begin(), ws.end()));
    std::set<Word> unique(ws.begin(), ws.end());
    CHECK(unique.size() == ws.size());
    for (const auto& w : ws) CHECK(w.weight() == m);
  }
  // count: compositions with parts 1 (two letters) and 3 (one letter)
  std::vector<long> count(8, 0);
  count[0] = 1;
  for (int m = 1; m < 8; ++m) count[m] = 2 * count[m - 1] + (m >= 3 ? count[m - 3] : 0);
  for (int m = 1; m <= 6; ++m) CHECK(words_of_weight(a, m).size() == static_cast<std::size_t>(count[m]));
}

TEST_CASE("Lyndon words match the necklace count") {
  for (long k = 1; k <= 3; ++k) {
    std::vector<long> primes{2, 3, 5};
    primes.resize(static_cast<std::size_t>(k));
    auto a = Alphabet::taus_and_sigmas(primes, {});
    auto ly = lyndon_words(a, 6);
    for (int m = 1; m <= 6; ++m) {
      long c = 0;
      for (const auto& w : ly) c += w.weight() == m ? 1 : 0;
      CHECK(c == oracle::necklaces(k, m));
    }
  }
}

TEST_CASE("graded Lyndon words with a sigma") {
  auto a = Alphabet::taus_and_sigmas({2}, {3});
  auto ly = lyndon_words(a, 3);
  REQUIRE(ly.size() == 2);
  CHECK(format_word(a, ly[0]) == "t2");
  CHECK(format_word(a, ly[1]) == "s3");
}

TEST_CASE("Lyndon factorization is non-increasing and concatenates back") {
  auto a = Alphabet::taus_and_sigmas({2, 3}, {3});
  for (int m = 1; m <= 5; ++m)
    for (const auto& w : words_of_weight(a, m)) {
      auto f = lyndon_factorization(a, w);
      Word back;
      for (const auto& u : f) {
        CHECK(is_lyndon(u));
        back = back.concat(u);
      }
      CHECK(back == w);
      for (std::size_t i = 1; i < f.size(); ++i) CHECK_FALSE(lex_less(f[i - 1], f[i]));
    }
}
