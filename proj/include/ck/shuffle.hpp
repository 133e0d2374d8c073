#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ck/word.hpp"

namespace ck {

using Rational = mpq_class;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(Alphabet a);

// Finite combination sum c_w f_w of word functionals (elements of the shuffle
// algebra). Zero coefficients are never stored.
class ShuffleElement {
 public:
  explicit ShuffleElement(AlphabetPtr alphabet);
  static ShuffleElement unit(AlphabetPtr alphabet);
  static ShuffleElement word(AlphabetPtr alphabet, const Word& w, const Rational& c = 1);

  const Alphabet& alphabet() const { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  const std::map<Word, Rational>& terms() const { return terms_; }

  Rational coefficient(const Word& w) const;
  void add(const Word& w, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  // Max word weight, -1 for the zero element.
  int max_weight() const;
  bool is_homogeneous() const;
  ShuffleElement homogeneous_part(int weight) const;

  ShuffleElement& operator+=(const ShuffleElement& o);
  ShuffleElement& operator-=(const ShuffleElement& o);
  ShuffleElement& operator*=(const Rational& c);
  friend ShuffleElement operator+(ShuffleElement a, const ShuffleElement& b) { return a += b; }
  friend ShuffleElement operator-(ShuffleElement a, const ShuffleElement& b) { return a -= b; }
  friend ShuffleElement operator*(ShuffleElement a, const Rational& c) { return a *= c; }
  friend ShuffleElement operator*(const Rational& c, ShuffleElement a) { return a *= c; }
  ShuffleElement operator-() const { return *this * Rational(-1); }
  bool operator==(const ShuffleElement& o) const;

 private:
  AlphabetPtr alphabet_;
  std::map<Word, Rational> terms_;
};

void require_same_alphabet(const Alphabet& a, const Alphabet& b);

// All shuffles of two words with multiplicity.
std::map<Word, long> shuffle_words(const Alphabet& alphabet, const Word& a, const Word& b);
ShuffleElement shuffle_product(const ShuffleElement& x, const ShuffleElement& y);
ShuffleElement shuffle_power(const ShuffleElement& x, int k);

// Element of A (x) A.
class TensorElement {
 public:
  using Key = std::pair<Word, Word>;
  explicit TensorElement(AlphabetPtr alphabet);

  const Alphabet& alphabet() const { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coefficient(const Word& a, const Word& b) const;
  void add(const Word& a, const Word& b, const Rational& c);
  bool is_zero() const { return terms_.empty(); }

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Rational& c);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  bool operator==(const TensorElement& o) const;

 private:
  AlphabetPtr alphabet_;
  std::map<Key, Rational> terms_;
};

TensorElement tensor(const ShuffleElement& a, const ShuffleElement& b);
// Multiplication in A (x) A (shuffle in each factor).
TensorElement tensor_product(const TensorElement& x, const TensorElement& y);
TensorElement deconcat_coproduct(const ShuffleElement& x);
TensorElement reduced_coproduct(const ShuffleElement& x);
// (Delta (x) id) and (id (x) Delta) applied to a tensor, as triple-indexed maps.
using TripleTensor = std::map<std::tuple<Word, Word, Word>, Rational>;
TripleTensor coproduct_left(const TensorElement& t);
TripleTensor coproduct_right(const TensorElement& t);
// Counit: coefficient of the empty word.
Rational counit(const ShuffleElement& x);

// Coproduct mu on the enveloping algebra: all splittings of the positions of w
// into two complementary subsequences, with multiplicity.
using UnshuffleSum = std::map<std::pair<Word, Word>, long>;
UnshuffleSum unshuffle(const Alphabet& alphabet, const Word& w);

// <x, w> = coefficient of f_w in x.
Rational pairing(const ShuffleElement& x, const Word& w);
Rational pairing(const TensorElement& t, const UnshuffleSum& mu);

// Coordinate ring of the polylog quotient up to a depth bound:
// log = f_0, Li_n = f_{0^{n-1}1}.
class PolylogCoordinateRing {
 public:
  explicit PolylogCoordinateRing(int depth);
  int depth() const { return depth_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  ShuffleElement log() const;
  ShuffleElement li(int n) const;
  // Throws if x has a word beyond the depth bound.
  void check(const ShuffleElement& x) const;

 private:
  int depth_;
  AlphabetPtr alphabet_;
};

// Reduced coproduct of Li_n computed by deconcatenation.
TensorElement reduced_coproduct_polylog(int n);
// The closed form sum_{i=1}^{n-1} log^i/i! (x) Li_{n-i}.
TensorElement polylog_coproduct_formula(int n);

// Monomials in Lyndon generators of a given total weight, as non-increasing
// lists of Lyndon words (deterministic order).
std::vector<std::vector<Word>> lyndon_monomials(const Alphabet& alphabet, int weight);
// The same monomials expanded in the word basis.
std::vector<ShuffleElement> monomial_basis(const AlphabetPtr& alphabet, int weight);

// Canonical serialization: (word, "p/q") pairs sorted by (weight, lex).
std::vector<std::pair<std::string, std::string>> to_pairs(const ShuffleElement& x);
ShuffleElement from_pairs(const AlphabetPtr& alphabet,
                          const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace ck
