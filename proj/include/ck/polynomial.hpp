#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ck {

using Rational = mpq_class;
using Monomial = std::vector<int>;  // exponent per ring variable

struct RingVariable {
  std::string name;
  int block;   // lower block index = eliminated first
  int weight;  // positive degree weight used inside the block
};

// Polynomial ring over Q with a block order: blocks compared in index order,
// each by weighted degree and then lexicographically in variable order
// (earlier variable = larger).
class PolyRing {
 public:
  explicit PolyRing(std::vector<RingVariable> variables);

  std::size_t size() const { return vars_.size(); }
  const RingVariable& variable(std::size_t i) const { return vars_[i]; }
  const std::vector<RingVariable>& variables() const { return vars_; }
  int index_of(const std::string& name) const;  // -1 if absent
  int num_blocks() const { return num_blocks_; }

  // <0, 0, >0 like strcmp, in the monomial order.
  int compare(const Monomial& a, const Monomial& b) const;
  Monomial one() const { return Monomial(vars_.size(), 0); }

 private:
  std::vector<RingVariable> vars_;
  int num_blocks_ = 0;
};

using RingPtr = std::shared_ptr<const PolyRing>;

class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  // Terms in decreasing monomial order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Monomial& leading_monomial() const { return terms_.front().first; }
  const Rational& leading_coefficient() const { return terms_.front().second; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(int e) const;
  Polynomial monic() const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  // Lowest block index of any variable that occurs; num_blocks() if constant.
  int lowest_block() const;
  bool uses_variable(int index) const;
  // Weighted degree using the given per-variable weights; -1 if not homogeneous.
  int homogeneous_weight(const std::vector<int>& weights) const;
  // Substitute every variable by a polynomial over another ring.
  Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;
  // Move into another ring that contains every used variable (matched by name).
  Polynomial rename_into(const RingPtr& target) const;

  std::string to_string() const;

 private:
  static Polynomial from_map(RingPtr ring, std::map<Monomial, Rational> m);
  RingPtr ring_;
  std::vector<Term> terms_;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_quotient(const Monomial& b, const Monomial& a);  // b / a
int total_degree(const Monomial& m);

// Parse "Li2 - 1/2*log*Li1" style strings over the ring's variable names.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace ck
