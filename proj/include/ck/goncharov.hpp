#pragma once

#include <map>
#include <vector>

#include "ck/shuffle.hpp"

namespace ck {

// Noncommutative polynomial in the enveloping algebra (word -> coefficient).
using NcPolynomial = std::map<Word, Rational>;

NcPolynomial nc_commutator(const NcPolynomial& a, const NcPolynomial& b);
// Standard bracketing of a Lyndon word: P_w = [P_u, P_v] with v the longest
// proper Lyndon suffix.
NcPolynomial lyndon_bracket(const Alphabet& alphabet, const Word& lyndon);

// Monomial in Lyndon generators: non-increasing list of Lyndon words.
using LyndonMonomial = std::vector<Word>;
using LyndonPolynomial = std::map<LyndonMonomial, Rational>;

// Express x in the polynomial basis of the shuffle algebra on Lyndon words.
LyndonPolynomial to_lyndon_polynomial(const ShuffleElement& x);
ShuffleElement from_lyndon_polynomial(const AlphabetPtr& alphabet, const LyndonPolynomial& p);

// The Goncharov subalgebra: annihilator of the two-sided ideal generated by
// brackets of Lie elements of weight >= 2. Weights are cached.
class GoncharovAlgebra {
 public:
  explicit GoncharovAlgebra(AlphabetPtr alphabet);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  // Basis of the weight-m part (homogeneous shuffle elements).
  const std::vector<ShuffleElement>& basis(int m);
  // Dimension of the weight-m indecomposables (= dim of the Goncharov quotient).
  int generator_count(int m);
  // Algebra generators in weight m; single Lyndon words are preferred.
  const std::vector<ShuffleElement>& generators(int m);
  // Annihilator membership, checked on every homogeneous part.
  bool contains(const ShuffleElement& x);

 private:
  struct Level {
    std::vector<ShuffleElement> basis;
    std::vector<ShuffleElement> generators;
    int decomposable_rank = 0;
    bool has_generators = false;
  };
  Level& level(int m);
  AlphabetPtr alphabet_;
  std::map<int, Level> levels_;
};

std::vector<ShuffleElement> goncharov_subalgebra_basis(const AlphabetPtr& alphabet, int m);
int goncharov_dimension(const AlphabetPtr& alphabet, int m);

// Independent brute force: dim L_m - dim [L_{>=2}, L_{>=2}]_m for the free Lie
// algebra L, both spanned by right-normed brackets of letters.
int hall_oracle_dimension(const Alphabet& alphabet, int m);

}  // namespace ck
