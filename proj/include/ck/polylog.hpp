#pragma once

#include <vector>

#include "ck/padic.hpp"
#include "ck/series.hpp"

namespace ck {

// Iwasawa branch: log p = 0, log of roots of unity = 0.
PadicNumber padic_log(const PadicNumber& z);
PadicNumber padic_log(long p, const Rational& z, long N);

// Coleman's p-adic n-logarithm to absolute precision N.
// Throws DomainError for z in the residue disk of 1 and
// InsufficientPrecision when the input cannot support N digits.
PadicNumber padic_polylog(int n, const PadicNumber& z, long N);
PadicNumber padic_polylog(int n, long p, const Rational& z, long N);

// sum over k prime to p of z^k / k^n, continued to units z != 1 mod p.
PadicNumber polylog_prime_to_p(int n, const PadicNumber& z, long N);

// zeta_p(n) = p^n/(p^n - 1) L_p(n, omega^{1-n}) from Bernoulli numbers.
PadicNumber padic_zeta(int n, long p, long N);
// Independent route: distribution relation over the (p-1)-st roots of unity.
PadicNumber padic_zeta_distribution(int n, long p, long N);

std::vector<Rational> bernoulli_numbers(int max_index);  // B_1 = -1/2

// Disk expansions around a unit center y != 0, 1 mod p, with K+1 coefficients
// computed at working precision N.
PadicSeries expand_log_series(const PadicNumber& y, long K, long N);
PadicSeries expand_polylog_series(int n, const PadicNumber& y, long K, long N);
// Li_1, ..., Li_n at y (index 0 holds Li_1).
std::vector<PadicSeries> polylog_tower(int n, const PadicNumber& y, long K, long N);
// Series of 1/(y + t) - 1/y, integral coefficients, used for Moebius moves.
PadicSeries reciprocal_shift_series(const PadicNumber& y, long K, long N);

// Smallest K such that the tail bound (alpha, beta) at slope s stays >= target.
long terms_needed(long p, long alpha, long beta, long slope, long target);

}  // namespace ck
