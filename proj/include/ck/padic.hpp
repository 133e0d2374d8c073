#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ck/linalg.hpp"

namespace ck {

// An element of Q_p known modulo p^N (absolute precision N):
//   value = p^v * u,  u a unit known modulo p^{N - v}.
// A value with v >= N is indistinguishable from zero and is stored with v = N.
// Arithmetic propagates worst-case precision.
class PadicNumber {
 public:
  PadicNumber() = default;
  static PadicNumber zero(long p, long N);
  static PadicNumber from_rational(long p, const Rational& x, long N);
  static PadicNumber from_integer(long p, const mpz_class& x, long N);
  // Reconstruct from serialized fields (p, valuation, unit digits, N).
  static PadicNumber from_digits(long p, long valuation, const std::vector<long>& unit_digits,
                                 long N);

  long prime() const { return p_; }
  long precision() const { return N_; }
  // Valuation; equals precision() when the value is zero to precision.
  long valuation() const { return v_; }
  const mpz_class& unit() const { return u_; }
  bool is_zero() const { return v_ >= N_; }
  long relative_precision() const { return N_ - v_; }

  // Rational representative p^v * u (u taken in [0, p^{N-v})).
  Rational to_rational() const;
  // Unit part digits base p, little-endian, N - v of them.
  std::vector<long> unit_digits() const;
  std::string to_string() const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);
  PadicNumber& operator+=(const PadicNumber& o) { return *this = *this + o; }
  PadicNumber& operator-=(const PadicNumber& o) { return *this = *this - o; }
  PadicNumber& operator*=(const PadicNumber& o) { return *this = *this * o; }
  PadicNumber& operator/=(const PadicNumber& o) { return *this = *this / o; }
  PadicNumber pow(long e) const;
  PadicNumber mul_rational(const Rational& c) const;
  // Multiply by p^k (exact shift).
  PadicNumber shift(long k) const;
  // Lower the absolute precision to min(N, current).
  PadicNumber reduce_precision(long N) const;

  // Same value modulo p^min(N, N').
  bool agrees_with(const PadicNumber& o, long N) const;
  // Structural equality (all fields).
  bool operator==(const PadicNumber& o) const = default;

  Approx to_approx() const;
  static PadicNumber from_approx(const Approx& a, long working_precision);

 private:
  PadicNumber(long p, long N, long v, mpz_class u);
  void normalize();
  long p_ = 2;
  long N_ = 0;
  long v_ = 0;
  mpz_class u_ = 0;
};

mpz_class pow_p(long p, long e);
// Teichmueller representative of a unit residue a mod p, to precision N.
PadicNumber teichmuller(long p, const mpz_class& a, long N);

}  // namespace ck
