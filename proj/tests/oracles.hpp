#pragma once
// Brute-force reference implementations, deliberately independent of the library code.

#include <gmpxx.h>

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using Rational = mpq_class;

// Shuffle of two strings by the recursive definition ua ш vb = (u ш vb)a + (ua ш v)b.
inline std::map<std::string, long> shuffle(const std::string& a, const std::string& b) {
  if (a.empty()) return {{b, 1}};
  if (b.empty()) return {{a, 1}};
  std::map<std::string, long> out;
  for (const auto& [w, c] : shuffle(a.substr(0, a.size() - 1), b)) out[w + a.back()] += c;
  for (const auto& [w, c] : shuffle(a, b.substr(0, b.size() - 1))) out[w + b.back()] += c;
  return out;
}

inline int mobius(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  return n > 1 ? -result : result;
}

// Number of Lyndon words of length m over k letters.
inline long necklaces(long k, int m) {
  long s = 0;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) {
      long pw = 1;
      for (int i = 0; i < m / d; ++i) pw *= k;
      s += mobius(d) * pw;
    }
  return s / m;
}

// Noncommutative polynomials in e0, e1 keyed by strings of '0'/'1'.
using FreePoly = std::map<std::string, Rational>;

inline FreePoly multiply(const FreePoly& a, const FreePoly& b) {
  FreePoly out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) out[u + v] += x * y;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline FreePoly add(FreePoly a, const FreePoly& b, const Rational& scale = 1) {
  for (const auto& [w, c] : b) a[w] += scale * c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

// ad(e0)^k (e1)
inline FreePoly ad_e0_power(int k) {
  FreePoly x{{"1", 1}};
  const FreePoly e0{{"0", 1}};
  for (int i = 0; i < k; ++i) x = add(multiply(e0, x), multiply(x, e0), -1);
  return x;
}

// p-adic valuation of a nonzero rational.
inline long valuation(const Rational& x, long p) {
  long v = 0;
  mpz_class n = x.get_num(), d = x.get_den();
  while (n % p == 0) { n /= p; ++v; }
  while (d % p == 0) { d /= p; --v; }
  return v;
}

// log(1 + x) = sum (-1)^{k+1} x^k / k for v(x) >= 1, truncated once terms pass p^N.
inline Rational log1p_series(const Rational& x, long p, long N) {
  const long vx = valuation(x, p);
  Rational sum = 0, xk = x;
  for (long k = 1;; ++k) {
    Rational term = xk / k;
    if (k % 2 == 0) term = -term;
    sum += term;
    xk *= x;
    // v(x^j / j) >= j * vx - log_p(j) >= N for every j > k once this holds
    long lp = 0;
    for (long q = p; q <= k + 1; q *= p) ++lp;
    if ((k + 1) * vx - lp >= N + 2) break;
  }
  return sum;
}

// x = y modulo p^N as rationals with p-integral difference.
inline bool congruent(const Rational& x, const Rational& y, long p, long N) {
  Rational d = x - y;
  d.canonicalize();
  return d == 0 || valuation(d, p) >= N;
}

// S-smooth test for integers.
inline bool smooth(mpz_class n, const std::vector<long>& primes) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (long q : primes)
    while (n % q == 0) n /= q;
  return n == 1;
}

// All z with z, 1 - z S-units and max(|num|, den) <= b, by direct search.
inline std::vector<Rational> s_unit_points(const std::vector<long>& primes, long b) {
  std::vector<Rational> out;
  for (long den = 1; den <= b; ++den)
    for (long num = -b; num <= b; ++num) {
      if (std::gcd(num, den) != 1) continue;
      Rational z(num, den);
      Rational w = 1 - z;
      if (z == 0 || w == 0) continue;
      if (smooth(z.get_num(), primes) && smooth(z.get_den(), primes) && smooth(w.get_num(), primes) &&
          smooth(w.get_den(), primes))
        out.push_back(z);
    }
  return out;
}

}  // namespace oracle
