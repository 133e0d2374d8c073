#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ck/linalg.hpp"
#include "ck/padic.hpp"
#include "ck/shuffle.hpp"
#include "ck/sunit.hpp"

namespace ck {

// log(q), zeta(i) = Li_i at the tangential point, or Li_i(a).
struct MotivicBasisElement {
  enum class Kind { Log, Zeta, PolyLog };
  Kind kind = Kind::Log;
  long prime = 0;  // Log only
  int depth = 1;   // weight
  SUnitPoint point;

  static MotivicBasisElement log(long q);
  static MotivicBasisElement zeta(int i);
  static MotivicBasisElement polylog(int i, const SUnitPoint& a);
  int weight() const { return depth; }
  std::string to_string() const;  // "log(2)", "zeta(3)", "Li2(3)"
  bool operator==(const MotivicBasisElement& o) const;
};

// A monomial in the generators: non-decreasing generator indices.
using GeneratorMonomial = std::vector<int>;

// Algebra basis of the polylogarithmic Goncharov subalgebra over Z_{>q_M} up to
// weight `depth`, with the monomial vector-space basis per weight.
struct PolylogBasis {
  long q_M = 0;
  long p = 0;
  int depth = 0;
  long precision = 0;  // eps = p^-precision
  long height = 0;     // height bound the generators were found at
  AlphabetPtr alphabet;  // tau_q (q <= q_M) and sigma_r (r odd, 3 <= r <= depth)
  std::vector<MotivicBasisElement> generators;  // increasing weight
  std::vector<int> target_dims;                 // index m: dim of weight-m indecomposables
  bool complete = false;

  // Weight-m vector-space basis: weight-m generators first, products after.
  std::vector<GeneratorMonomial> monomials(int m) const;
  std::vector<int> generators_of_weight(int m) const;
  std::string monomial_name(const GeneratorMonomial& mono) const;
};

// Expansion of Li_m(a) over the weight-m monomial basis with its p-adic data.
struct ExpansionRecord {
  std::vector<Approx> coefficients;  // over PolylogBasis::monomials(m)
  Approx sigma_pairing;              // <Li_m(a), sigma_m>, zero for even m
  PadicNumber period;                // Li_m^p(a)
};

struct ExpansionTable {
  long p = 0;
  long precision = 0;
  std::vector<PadicNumber> generator_periods;  // aligned with PolylogBasis::generators
  std::map<std::pair<Rational, int>, ExpansionRecord> records;

  const ExpansionRecord* find(const Rational& a, int m) const;
};

// Element of the shuffle algebra with p-adic coefficients.
using ApproxShuffle = std::map<Word, Approx>;
ApproxShuffle approx_shuffle_product(const Alphabet& alphabet, const ApproxShuffle& x, const ApproxShuffle& y);

// Li_1(a) = -log(1 - a): exact coefficients -v_q(1 - a) over the logs q <= q_M.
std::vector<Rational> expand_li1(const Rational& a, long q_M);

// Expand Li_m(a) over the weight-m basis (precision eps = p^-precision) and
// record it. For odd m the zeta coefficient comes from the periods.
const ExpansionRecord& expand_polylog(const Rational& a, int m, const PolylogBasis& basis, ExpansionTable& table);

// Word expansion of Li_m(a) in the tau/sigma coordinates fixed by the basis.
ApproxShuffle polylog_word_expansion(const Rational& a, int m, const PolylogBasis& basis, ExpansionTable& table);
ApproxShuffle monomial_word_expansion(const GeneratorMonomial& mono, const PolylogBasis& basis, ExpansionTable& table);

// <monomial, w> by devissage: unshuffle for products, leaf rules for generators.
Approx pair_with_word(const GeneratorMonomial& mono, const Word& w, const PolylogBasis& basis, ExpansionTable& table);

// Period of a monomial (product of generator periods).
PadicNumber monomial_period(const GeneratorMonomial& mono, const PolylogBasis& basis, const ExpansionTable& table);

struct BasisSchedule {
  long initial_height = 8;   // doubled every step
  long initial_precision = 20;
  long precision_step = 4;   // eps shrinks by p^-precision_step per step
  int steps = 4;             // steps per (q_M, p) fiber
  int fibers = 2;            // fibers tried, p = nextprime(q_M)
};

struct BasisResult {
  PolylogBasis basis;
  ExpansionTable table;
};

// The smallest prime p >= 5 with p > q_s.
long default_auxiliary_prime(long q_s);

// One attempt at fixed (q_M, p, height, precision); basis.complete tells whether it halted.
BasisResult build_basis_at(long q_M, long p, int n, long height, long precision);
// Runs the schedule starting at the fiber of p (or the default prime for q_s).
// Throws BudgetExhausted when no step halts.
BasisResult build_basis(long q_s, int n, const BasisSchedule& schedule = {}, std::optional<long> prime = {});

// Rows: monomial basis of each weight 1..n; columns: words of weight <= n.
struct ShuffleMatrix {
  std::vector<std::pair<int, GeneratorMonomial>> rows;  // (weight, monomial)
  std::vector<Word> columns;
  ApproxMatrix entries;
};
ShuffleMatrix shuffle_expansion_matrix(const PolylogBasis& basis, ExpansionTable& table, int n);

// Basis of the subspace of combinations (per weight) whose expansion avoids the
// tau letters of primes not excluded by Z. Vectors are over M.rows.
std::vector<std::vector<Approx>> descend_basis(const ShuffleMatrix& M, const PolylogBasis& basis,
                                               const OpenIntegerScheme& Z, int n);

// p-adic period of a homogeneous element x of A(Z) written in words over a
// subalphabet of the basis alphabet (letters matched by name).
Approx motivic_period(const ShuffleElement& x, const PolylogBasis& basis, ExpansionTable& table);

}  // namespace ck
