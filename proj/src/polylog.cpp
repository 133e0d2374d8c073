#include "ck/polylog.hpp"

#include <algorithm>
#include <functional>

#include "ck/error.hpp"

namespace ck {

long terms_needed(long p, long alpha, long beta, long slope, long target) {
  for (long K = 0; K < 1000000; ++K)
    if (tail_minimum(p, TailBound{alpha, beta}, slope, K + 1) >= target) return K;
  throw Error(ErrorCode::InsufficientPrecision, "series needs too many terms");
}

// ------------------------------------------------------------------ logarithm

PadicNumber padic_log(const PadicNumber& z) {
  const long p = z.prime();
  if (z.is_zero()) throw Error(ErrorCode::DomainError, "log of zero");
  const PadicNumber u = z.shift(-z.valuation());  // unit, log p = 0
  // u^{p-1} (u^2 when p = 2) is a principal unit; roots of unity drop out.
  const long e = (p == 2) ? 2 : p - 1;
  const PadicNumber x = u.pow(e) - PadicNumber::from_integer(p, 1, u.precision());
  const long Nu = x.precision();
  if (x.is_zero()) return PadicNumber::zero(p, Nu - valuation(mpz_class(e), p));
  const long vx = x.valuation();
  const long K = terms_needed(p, 0, 1, vx, Nu);
  PadicNumber sum = PadicNumber::zero(p, Nu);
  PadicNumber xk = x;
  for (long k = 1; k <= K; ++k) {
    PadicNumber term = xk.mul_rational(Rational(k % 2 == 1 ? 1 : -1, k));
    sum += term;
    if (k < K) xk *= x;
  }
  return sum.reduce_precision(Nu).mul_rational(Rational(1, e));
}

PadicNumber padic_log(long p, const Rational& z, long N) {
  if (z == 0) throw Error(ErrorCode::DomainError, "log of zero");
  long guard = 4;
  for (int attempt = 0; attempt < 6; ++attempt, guard *= 2) {
    PadicNumber r = padic_log(PadicNumber::from_rational(p, z, N + guard + std::max(0L, valuation(z, p))));
    if (r.precision() >= N) return r.reduce_precision(N);
  }
  throw Error(ErrorCode::InsufficientPrecision, "padic_log: precision not reached");
}

// ------------------------------------------------------------------ Bernoulli

std::vector<Rational> bernoulli_numbers(int max_index) {
  std::vector<Rational> B(static_cast<std::size_t>(max_index + 1));
  B[0] = 1;
  for (int m = 1; m <= max_index; ++m) {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    Rational s = 0;
    mpz_class c;
    for (int k = 0; k < m; ++k) {
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + 1), static_cast<unsigned long>(k));
      s += Rational(c) * B[k];
    }
    B[m] = -s / Rational(m + 1);
  }
  return B;
}

namespace {

mpz_class binom_negative(long m, long j) {
  // C(-m, j) = (-1)^j C(m + j - 1, j)
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + j - 1), static_cast<unsigned long>(j));
  return (j % 2 == 0) ? c : mpz_class(-c);
}

// P_0 = 1, P_{j+1} = x (P_j' (1 - x) + (j + 1) P_j); sum_m m^j x^m = P_j / (1-x)^{j+1}.
std::vector<std::vector<mpz_class>> eulerian_polynomials(long J) {
  std::vector<std::vector<mpz_class>> P;
  P.push_back({1});
  for (long j = 0; j < J; ++j) {
    const auto& cur = P.back();
    std::vector<mpz_class> q(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      q[i] += cur[i] * (j + 1);
      if (i >= 1) {
        q[i - 1] += cur[i] * static_cast<long>(i);
        q[i] -= cur[i] * static_cast<long>(i);
      }
    }
    std::vector<mpz_class> next(q.size() + 1, 0);
    for (std::size_t i = 0; i < q.size(); ++i) next[i + 1] = q[i];
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    P.push_back(std::move(next));
  }
  return P;
}

PadicNumber eval_poly(const std::vector<mpz_class>& coeffs, const PadicNumber& x, long N) {
  const long p = x.prime();
  PadicNumber acc = PadicNumber::from_integer(p, coeffs.back(), N);
  for (std::size_t i = coeffs.size() - 1; i-- > 0;)
    acc = acc * x + PadicNumber::from_integer(p, coeffs[i], N);
  return acc;
}

void require_unit_not_one(const PadicNumber& z) {
  const long p = z.prime();
  if (z.valuation() != 0) throw Error(ErrorCode::DomainError, "expected a p-adic unit");
  mpz_class r = z.unit() % p;
  if (r == 1 % p) throw Error(ErrorCode::DomainError, "disk-of-1 not supported");
}

bool is_teichmuller(const PadicNumber& y) {
  return y.pow(y.prime()).agrees_with(y, y.precision());
}

PadicNumber li_at_teichmuller(int m, const PadicNumber& omega, long N) {
  const long p = omega.prime();
  PadicNumber part = polylog_prime_to_p(m, omega, N);
  Rational factor = power_of(p, m) / (power_of(p, m) - 1);
  return part.mul_rational(factor);
}

}  // namespace

PadicNumber polylog_prime_to_p(int n, const PadicNumber& z, long N) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "polylog index must be >= 1");
  require_unit_not_one(z);
  const long p = z.prime();
  const PadicNumber zz = z.reduce_precision(N);
  const PadicNumber x = zz.pow(p);
  const PadicNumber inv = PadicNumber::from_integer(p, 1, N) / (PadicNumber::from_integer(p, 1, N) - x);
  const long J = N + 2;
  auto P = eulerian_polynomials(J);
  // powers z^a for a = 1..p-1
  std::vector<PadicNumber> zpow;
  zpow.push_back(zz);
  for (long a = 2; a < p; ++a) zpow.push_back(zpow.back() * zz);
  PadicNumber sum = PadicNumber::zero(p, N);
  PadicNumber inv_pow = inv;  // inv^{j+1}
  for (long j = 0; j <= J; ++j) {
    // A_j = sum_a z^a a^{-(n+j)}
    PadicNumber A = PadicNumber::zero(p, N);
    for (long a = 1; a < p; ++a) {
      mpz_class ap;
      mpz_ui_pow_ui(ap.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(n + j));
      A += zpow[a - 1].mul_rational(Rational(1) / Rational(ap));
    }
    PadicNumber term = (A * eval_poly(P[j], x, N) * inv_pow)
                           .mul_rational(Rational(binom_negative(n, j)))
                           .shift(j);
    sum += term;
    inv_pow *= inv;
  }
  // omitted terms j > J have valuation > J >= N
  return sum.reduce_precision(N);
}

// ------------------------------------------------------------------ polylog

namespace {

PadicNumber one(long p, long N) { return PadicNumber::from_integer(p, 1, N); }

PadicSeries li1_series_at(const PadicNumber& y, long K, long N) {
  const long p = y.prime();
  const PadicNumber oneN = one(p, N);
  const PadicNumber c0 = -padic_log(oneN - y);
  const PadicNumber inv = oneN / (oneN - y);
  std::vector<PadicNumber> c{c0};
  PadicNumber ik = inv;
  for (long k = 1; k <= K; ++k) {
    c.push_back(ik.mul_rational(Rational(1, k)));
    ik *= inv;
  }
  return PadicSeries(y, std::move(c), TailBound{0, 1});
}

std::vector<PadicSeries> tower_with_constants(int n, const PadicNumber& y, long K, long N,
                                              const std::function<PadicNumber(int)>& constant) {
  std::vector<PadicSeries> out;
  out.push_back(li1_series_at(y, K, N));
  if (n >= 2) {
    PadicSeries recip = reciprocal_shift_series(y, K, N).add_constant(one(y.prime(), N) / y);
    for (int m = 2; m <= n; ++m) out.push_back((out.back() * recip).integrate(constant(m)));
  }
  return out;
}

std::vector<PadicSeries> tower_at_teichmuller(int n, const PadicNumber& omega, long K, long N) {
  return tower_with_constants(n, omega, K, N, [&](int m) { return li_at_teichmuller(m, omega, N); });
}

PadicNumber polylog_unit_attempt(int n, const PadicNumber& z, long Nw) {
  require_unit_not_one(z);
  const long p = z.prime();
  const PadicNumber omega = teichmuller(p, z.unit() % p, Nw);
  const PadicNumber t = z - omega;
  const long s = std::max(1L, std::min(t.valuation(), Nw));
  const long K = terms_needed(p, -n - 2, n, s, Nw);
  auto tower = tower_at_teichmuller(n, omega, K, Nw);
  return tower[n - 1].evaluate(t);
}

PadicNumber polylog_small_attempt(int n, const PadicNumber& z) {
  const long p = z.prime();
  const long Nz = z.precision();
  if (z.is_zero()) return PadicNumber::zero(p, Nz);
  const long vz = z.valuation();
  const long K = terms_needed(p, 0, n, vz, Nz);
  PadicNumber sum = PadicNumber::zero(p, Nz);
  PadicNumber zk = z;
  for (long k = 1; k <= K; ++k) {
    mpz_class kn;
    mpz_ui_pow_ui(kn.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
    sum += zk.mul_rational(Rational(1) / Rational(kn));
    if (k < K) zk *= z;
  }
  return sum.reduce_precision(Nz);
}

PadicNumber polylog_attempt(int n, const PadicNumber& z, long Nw) {
  const long p = z.prime();
  if (z.is_zero()) return PadicNumber::zero(p, z.precision());
  const long v = z.valuation();
  if (v > 0) return polylog_small_attempt(n, z);
  if (v == 0) return polylog_unit_attempt(n, z, Nw);
  // Li_n(z) = -(-1)^n Li_n(1/z) - log(z)^n / n!
  const PadicNumber w = one(p, z.precision() - 2 * v) / z;
  PadicNumber inner = polylog_small_attempt(n, w);
  if (n % 2 == 0) inner = -inner;
  Rational fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  return inner - padic_log(z).pow(n).mul_rational(Rational(1) / fact);
}

}  // namespace

PadicNumber padic_polylog(int n, const PadicNumber& z, long N) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "polylog index must be >= 1");
  long guard = 4 + 2 * n;
  for (int attempt = 0; attempt < 5; ++attempt, guard *= 2) {
    PadicNumber r = polylog_attempt(n, z, N + guard);
    if (r.precision() >= N) return r.reduce_precision(N);
  }
  throw Error(ErrorCode::InsufficientPrecision, "padic_polylog: precision not reached");
}

PadicNumber padic_polylog(int n, long p, const Rational& z, long N) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "polylog index must be >= 1");
  if (z == 0) return PadicNumber::zero(p, N);
  long guard = 4 + 2 * n;
  const long vz = valuation(z, p);
  for (int attempt = 0; attempt < 5; ++attempt, guard *= 2) {
    const long Nw = N + guard;
    PadicNumber zp = PadicNumber::from_rational(p, z, Nw + std::abs(vz) * (n + 2));
    PadicNumber r = polylog_attempt(n, zp, Nw);
    if (r.precision() >= N) return r.reduce_precision(N);
  }
  throw Error(ErrorCode::InsufficientPrecision, "padic_polylog: precision not reached");
}

// ------------------------------------------------------------------ zeta values

PadicNumber padic_zeta(int n, long p, long N) {
  if (n < 3 || n % 2 == 0)
    throw Error(ErrorCode::InvalidArgument, "zeta_p(n) requires odd n >= 3 (even motivic zetas vanish)");
  const long F = (p == 2) ? 4 : p;
  const long vF = valuation(mpz_class(F), p);
  const long vn1 = valuation(mpz_class(n - 1), p);
  // error after truncation at J: (J+1) vF - 1 - vF - v(n-1) + n >= N
  long J = 0;
  while ((J + 1) * vF - 1 - vF - vn1 + n < N + 2) ++J;
  auto B = bernoulli_numbers(static_cast<int>(J));
  Rational S = 0;
  for (long a = 1; a < F; ++a) {
    if (a % p == 0) continue;
    Rational inner = 0;
    Rational ratio_pow = 1;  // (F/a)^j
    for (long j = 0; j <= J; ++j) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n - 2 + j), static_cast<unsigned long>(j));
      if (j % 2 == 1) c = -c;  // C(1-n, j)
      inner += Rational(c) * ratio_pow * B[j];
      ratio_pow *= Rational(F, a);
    }
    mpz_class an;
    mpz_ui_pow_ui(an.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(n - 1));
    S += inner / Rational(an);
  }
  Rational L = S / Rational(F * (n - 1));
  Rational zeta = L * power_of(p, n) / (power_of(p, n) - 1);
  return PadicNumber::from_rational(p, zeta, N);
}

PadicNumber padic_zeta_distribution(int n, long p, long N) {
  if (n < 3 || n % 2 == 0)
    throw Error(ErrorCode::InvalidArgument, "zeta_p(n) requires odd n >= 3 (even motivic zetas vanish)");
  if (p < 5) throw Error(ErrorCode::DomainError, "distribution route needs a nontrivial root of unity mod p");
  long guard = 6;
  for (int attempt = 0; attempt < 5; ++attempt, guard *= 2) {
    const long Nw = N + guard;
    PadicNumber sum = PadicNumber::zero(p, Nw);
    for (long r = 2; r < p; ++r) sum += li_at_teichmuller(n, teichmuller(p, r, Nw), Nw);
    // Li_n(1) ((p-1)^{1-n} - 1) = sum over nontrivial roots of unity
    mpz_class mp;
    mpz_ui_pow_ui(mp.get_mpz_t(), static_cast<unsigned long>(p - 1), static_cast<unsigned long>(n - 1));
    const Rational m_pow = Rational(1) / Rational(mp) - 1;
    PadicNumber r = sum.mul_rational(Rational(1) / m_pow);
    if (r.precision() >= N) return r.reduce_precision(N);
  }
  throw Error(ErrorCode::InsufficientPrecision, "padic_zeta_distribution: precision not reached");
}

// ------------------------------------------------------------------ disk series

PadicSeries reciprocal_shift_series(const PadicNumber& y, long K, long N) {
  const long p = y.prime();
  if (y.valuation() != 0) throw Error(ErrorCode::DomainError, "series center must be a unit");
  const PadicNumber inv = one(p, N) / y.reduce_precision(N);
  std::vector<PadicNumber> c{PadicNumber::zero(p, 1L << 40)};
  PadicNumber ik = inv * inv;
  for (long k = 1; k <= K; ++k) {
    c.push_back(k % 2 == 1 ? -ik : ik);
    ik *= inv;
  }
  return PadicSeries(y, std::move(c), TailBound{0, 0});
}

PadicSeries expand_log_series(const PadicNumber& y, long K, long N) {
  const long p = y.prime();
  if (y.valuation() != 0) throw Error(ErrorCode::DomainError, "series center must be a unit");
  const PadicNumber yy = y.reduce_precision(N);
  const PadicNumber inv = one(p, N) / yy;
  std::vector<PadicNumber> c{padic_log(yy)};
  PadicNumber ik = inv;
  for (long k = 1; k <= K; ++k) {
    c.push_back(ik.mul_rational(Rational(k % 2 == 1 ? 1 : -1, k)));
    ik *= inv;
  }
  return PadicSeries(y, std::move(c), TailBound{0, 1});
}

std::vector<PadicSeries> polylog_tower(int n, const PadicNumber& y0, long K, long N) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "polylog index must be >= 1");
  require_unit_not_one(y0);
  const long p = y0.prime();
  const PadicNumber y = y0.reduce_precision(N);
  if (is_teichmuller(y)) return tower_at_teichmuller(n, y, K, N);
  const PadicNumber omega = teichmuller(p, y.unit() % p, N);
  const PadicNumber t0 = y - omega;
  const long s = std::max(1L, std::min(t0.valuation(), N));
  const long K2 = terms_needed(p, -n - 2, n, s, N);
  auto base = tower_at_teichmuller(n, omega, K2, N);
  return tower_with_constants(n, y, K, N, [&](int m) { return base[m - 1].evaluate(t0); });
}

PadicSeries expand_polylog_series(int n, const PadicNumber& y, long K, long N) {
  return polylog_tower(n, y, K, N).back();
}

}  // namespace ck
