#pragma once

#include <map>
#include <string>
#include <vector>

#include "ck/goncharov.hpp"
#include "ck/groebner.hpp"
#include "ck/polynomial.hpp"
#include "ck/shuffle.hpp"

namespace ck {

// Graded alphabet of the geometric step: one tau per excluded prime and one
// sigma per odd weight 3..depth.
AlphabetPtr geometric_alphabet(const std::vector<long>& primes, int depth);

// Names of the ring symbols.
std::string cocycle_symbol(const Letter& generator);  // "Phi:t2:0"-style prefix without the polylog word
std::string cocycle_name(const Letter& generator, const std::string& polylog_word);
std::string word_variable_name(const Alphabet& alphabet, const Word& w);  // "f:t2.t3"
std::string target_name(int k);  // 0 -> "log", k -> "Li<k>"

// Image of one target coordinate: sum over words w of f_w times a monomial in
// the cocycle coordinates.
struct TargetImage {
  std::string target;
  std::vector<std::pair<Word, std::vector<std::string>>> terms;  // (w, cocycle symbols with repetition)
};

struct SubstitutionMap {
  AlphabetPtr alphabet;
  int depth = 0;
  std::vector<std::string> cocycle_names;  // all Phi symbols
  std::vector<TargetImage> images;         // log, Li1, ..., Li_depth
  std::string to_string(const std::string& target) const;
};

SubstitutionMap ev_sharp(const AlphabetPtr& alphabet, int depth);

struct IdealPresentation {
  AlphabetPtr alphabet;
  int depth = 0;
  std::string order;
  RingPtr ring;  // coefficient generators and log, Li1, ..., Li_depth
  // Coefficient generator name -> element of the Goncharov subalgebra.
  std::map<std::string, ShuffleElement> coefficients;
  std::vector<Polynomial> generators;

  std::vector<std::string> generator_strings() const;
};

// Kernel of ev# restricted to A^G[log, Li1..Li_n], by block elimination.
// Throws BudgetExhausted (partial basis size in the message) if Buchberger stops.
IdealPresentation eliminate(const SubstitutionMap& subst, const GroebnerBudget& budget = {});
IdealPresentation eliminate(const SubstitutionMap& subst, GoncharovAlgebra& goncharov,
                            const GroebnerBudget& budget = {});

// Exact check that F vanishes after substituting ev# and the coefficient definitions.
bool vanishes_under_ev(const IdealPresentation& ideal, const SubstitutionMap& subst, const Polynomial& f);

std::string serialize_ideal(const IdealPresentation& ideal);
IdealPresentation parse_ideal(const std::string& text);

}  // namespace ck
