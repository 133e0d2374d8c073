#include "ck/groebner.hpp"

#include <algorithm>

#include "ck/error.hpp"

namespace ck {

namespace {

// Index of a divisor whose leading monomial divides m, or -1.
int find_reducer(const Monomial& m, const std::vector<Polynomial>& divisors) {
  for (std::size_t i = 0; i < divisors.size(); ++i)
    if (!divisors[i].is_zero() && divides(divisors[i].leading_monomial(), m)) return static_cast<int>(i);
  return -1;
}

// Clear denominators and content to keep coefficients short; the ideal is unchanged.
Polynomial normalize(const Polynomial& f) { return f.monic(); }

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  Polynomial rem(f.ring());
  Polynomial p = f;
  std::vector<Polynomial::Term> kept;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Rational lc = p.leading_coefficient();
    int r = find_reducer(lm, divisors);
    if (r >= 0) {
      const Polynomial& g = divisors[r];
      p -= g.times_monomial(monomial_quotient(lm, g.leading_monomial()), lc / g.leading_coefficient());
    } else {
      kept.emplace_back(lm, lc);
      p -= Polynomial::monomial(f.ring(), lm, lc);
    }
  }
  for (auto& [m, c] : kept) rem += Polynomial::monomial(f.ring(), m, c);
  return rem;
}

GroebnerResult groebner_basis(const std::vector<Polynomial>& generators, const GroebnerBudget& budget) {
  GroebnerResult result;
  std::vector<Polynomial> G;
  std::vector<Pair> pairs;
  std::vector<std::vector<bool>> done;  // pairs already handled or discarded

  auto add = [&](const Polynomial& h) {
    const std::size_t k = G.size();
    G.push_back(normalize(h));
    for (auto& row : done) row.push_back(false);
    done.emplace_back(k + 1, false);
    for (std::size_t i = 0; i < k; ++i) {
      if (G[i].is_zero()) continue;
      pairs.push_back({i, k, monomial_lcm(G[i].leading_monomial(), G[k].leading_monomial())});
    }
  };

  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    Polynomial r = normal_form(g, G);
    if (!r.is_zero()) add(r);
  }

  const RingPtr ring = G.empty() ? RingPtr() : G.front().ring();
  while (!pairs.empty()) {
    if (result.pairs_processed >= budget.max_pairs || G.size() > budget.max_basis) {
      result.complete = false;
      break;
    }
    // normal strategy: smallest lcm first
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      int c = ring->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i);
    });
    Pair pr = *it;
    pairs.erase(it);
    const Polynomial& f = G[pr.i];
    const Polynomial& g = G[pr.j];
    auto mark = [&](std::size_t a, std::size_t b) { done[std::max(a, b)][std::min(a, b)] = true; };
    // product criterion
    if (coprime(f.leading_monomial(), g.leading_monomial())) {
      mark(pr.i, pr.j);
      continue;
    }
    // chain criterion: some k with LM_k | lcm and both (i,k), (j,k) already handled
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || G[k].is_zero()) continue;
      if (!divides(G[k].leading_monomial(), pr.lcm)) continue;
      if (done[std::max(pr.i, k)][std::min(pr.i, k)] && done[std::max(pr.j, k)][std::min(pr.j, k)]) chain = true;
    }
    mark(pr.i, pr.j);
    if (chain) continue;
    ++result.pairs_processed;
    Polynomial s = f.times_monomial(monomial_quotient(pr.lcm, f.leading_monomial()), Rational(1) / f.leading_coefficient()) -
                   g.times_monomial(monomial_quotient(pr.lcm, g.leading_monomial()), Rational(1) / g.leading_coefficient());
    Polynomial r = normal_form(s, G);
    if (!r.is_zero()) add(r);
  }

  // Minimalize, then interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero()) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || G[j].is_zero()) continue;
      if (divides(G[j].leading_monomial(), G[i].leading_monomial()) &&
          (G[j].leading_monomial() != G[i].leading_monomial() || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  if (!result.complete) {
    result.basis = std::move(minimal);
    return result;
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Polynomial& f = minimal[i];
    Polynomial head = Polynomial::monomial(f.ring(), f.leading_monomial(), f.leading_coefficient());
    Polynomial tail = normal_form(f - head, others);
    reduced.push_back((head + tail).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.ring()->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  result.basis = std::move(reduced);
  return result;
}

std::vector<Polynomial> elimination_part(const std::vector<Polynomial>& basis, int first_kept_block) {
  std::vector<Polynomial> out;
  for (const auto& g : basis)
    if (g.lowest_block() >= first_kept_block) out.push_back(g);
  return out;
}

}  // namespace ck
