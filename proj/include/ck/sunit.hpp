#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace ck {

using Rational = mpq_class;

bool is_prime(long n);
long next_prime(long n);  // smallest prime > n
long prev_prime(long n);  // largest prime < n, 0 if none
std::vector<long> primes_up_to(long n);

// Spec Z with finitely many primes removed. Tapered schemes Z_{>q} remove all
// primes <= q and store only q.
class OpenIntegerScheme {
 public:
  OpenIntegerScheme() = default;
  static OpenIntegerScheme excluding(std::vector<long> primes);
  static OpenIntegerScheme tapered(long q);
  // "Z", "Z[1/2,1/3]", "Z>5"
  static OpenIntegerScheme parse(const std::string& text);

  std::vector<long> excluded_primes() const;
  bool is_tapered() const { return tapered_.has_value(); }
  std::optional<long> tapered_bound() const { return tapered_; }
  // Largest excluded prime, 2 when nothing is excluded.
  long largest_excluded_or_two() const;
  bool excludes(long prime) const;
  bool is_unit(const Rational& x) const;
  std::string to_string() const;
  bool operator==(const OpenIntegerScheme&) const = default;

 private:
  std::vector<long> excluded_;
  std::optional<long> tapered_;
};

struct SUnitPoint {
  enum class Kind { Rational, Tangential };  // Tangential: the basepoint -1 at 1
  Kind kind = Kind::Rational;
  Rational value;
  std::vector<long> primes;        // support primes the vectors refer to
  std::vector<long> val_z;         // v_q(z)
  std::vector<long> val_one_minus; // v_q(1 - z)

  static SUnitPoint tangential();
  static SUnitPoint make(const Rational& z, const std::vector<long>& primes);
  bool is_tangential() const { return kind == Kind::Tangential; }
  std::string to_string() const;
  bool operator==(const SUnitPoint& o) const;
};

long height(const Rational& x);
std::vector<long> valuation_vector(const Rational& x, const std::vector<long>& primes);

// All z with z and 1 - z units on the scheme and height <= b, ordered by
// height, then numerator.
std::vector<SUnitPoint> enumerate_points(const OpenIntegerScheme& scheme, long b);

}  // namespace ck
