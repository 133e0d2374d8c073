#pragma once

#include <vector>

#include "ck/polynomial.hpp"

namespace ck {

struct GroebnerBudget {
  long max_pairs = 200000;        // S-polynomials reduced
  std::size_t max_basis = 4000;   // basis elements kept
};

struct GroebnerResult {
  std::vector<Polynomial> basis;  // reduced and monic when complete
  bool complete = true;
  long pairs_processed = 0;
};

// Buchberger with the normal selection strategy and both Buchberger criteria.
// Stops early (complete = false, partial basis kept) when the budget runs out.
GroebnerResult groebner_basis(const std::vector<Polynomial>& generators, const GroebnerBudget& budget = {});

// Fully reduced remainder of f modulo the list.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

// Basis elements free of every variable in blocks < first_kept_block. For a
// Groebner basis under a block order this is a Groebner basis of the
// elimination ideal.
std::vector<Polynomial> elimination_part(const std::vector<Polynomial>& basis, int first_kept_block);

}  // namespace ck
