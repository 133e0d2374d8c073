#include "ck/padic.hpp"

#include <algorithm>

#include "ck/error.hpp"

namespace ck {

mpz_class pow_p(long p, long e) {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "pow_p: negative exponent");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

PadicNumber::PadicNumber(long p, long N, long v, mpz_class u)
    : p_(p), N_(N), v_(v), u_(std::move(u)) {
  normalize();
}

void PadicNumber::normalize() {
  if (v_ >= N_ || u_ == 0) {
    v_ = N_;
    u_ = 0;
    return;
  }
  // pull out extra factors of p from u
  while (mpz_divisible_ui_p(u_.get_mpz_t(), static_cast<unsigned long>(p_))) {
    mpz_divexact_ui(u_.get_mpz_t(), u_.get_mpz_t(), static_cast<unsigned long>(p_));
    ++v_;
    if (v_ >= N_) {
      v_ = N_;
      u_ = 0;
      return;
    }
  }
  mpz_class mod = pow_p(p_, N_ - v_);
  mpz_mod(u_.get_mpz_t(), u_.get_mpz_t(), mod.get_mpz_t());
}

PadicNumber PadicNumber::zero(long p, long N) { return PadicNumber(p, N, N, 0); }

PadicNumber PadicNumber::from_integer(long p, const mpz_class& x, long N) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "prime must be >= 2");
  if (x == 0) return zero(p, N);
  long v = ck::valuation(x, p);
  if (v >= N) return zero(p, N);
  mpz_class u = x;
  mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), pow_p(p, v).get_mpz_t());
  return PadicNumber(p, N, v, u);
}

PadicNumber PadicNumber::from_rational(long p, const Rational& x, long N) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "prime must be >= 2");
  if (x == 0) return zero(p, N);
  long v = ck::valuation(x, p);
  if (v >= N) return zero(p, N);
  Rational unit = x * power_of(p, -v);
  mpz_class mod = pow_p(p, N - v);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), unit.get_den().get_mpz_t(), mod.get_mpz_t());
  return PadicNumber(p, N, v, unit.get_num() * inv);
}

PadicNumber PadicNumber::from_digits(long p, long valuation, const std::vector<long>& digits,
                                     long N) {
  mpz_class u = 0, base = 1;
  for (long d : digits) {
    u += base * d;
    base *= p;
  }
  return PadicNumber(p, N, valuation, u);
}

Rational PadicNumber::to_rational() const {
  if (is_zero()) return 0;
  return Rational(u_) * power_of(p_, v_);
}

std::vector<long> PadicNumber::unit_digits() const {
  std::vector<long> out;
  if (is_zero()) return out;
  mpz_class u = u_;
  for (long i = 0; i < N_ - v_; ++i) {
    mpz_class r;
    mpz_fdiv_qr_ui(u.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(p_));
    out.push_back(r.get_si());
  }
  return out;
}

std::string PadicNumber::to_string() const {
  if (is_zero()) return "O(" + std::to_string(p_) + "^" + std::to_string(N_) + ")";
  return u_.get_str() + "*" + std::to_string(p_) + "^" + std::to_string(v_) + " + O(" +
         std::to_string(p_) + "^" + std::to_string(N_) + ")";
}

PadicNumber PadicNumber::operator-() const { return PadicNumber(p_, N_, v_, -u_); }

namespace {

void same_prime(const PadicNumber& a, const PadicNumber& b) {
  if (a.prime() != b.prime()) throw Error(ErrorCode::InvalidArgument, "p-adic prime mismatch");
}

}  // namespace

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  same_prime(a, b);
  const long N = std::min(a.N_, b.N_);
  const long v = std::min(a.v_, b.v_);
  if (v >= N) return PadicNumber::zero(a.p_, N);
  mpz_class s = 0;
  if (!a.is_zero()) s += a.u_ * pow_p(a.p_, a.v_ - v);
  if (!b.is_zero()) s += b.u_ * pow_p(a.p_, b.v_ - v);
  return PadicNumber(a.p_, N, v, s);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  same_prime(a, b);
  const long p = a.p_;
  if (a.is_zero() && b.is_zero()) return PadicNumber::zero(p, a.N_ + b.N_);
  if (a.is_zero()) return PadicNumber::zero(p, a.N_ + b.v_);
  if (b.is_zero()) return PadicNumber::zero(p, b.N_ + a.v_);
  const long v = a.v_ + b.v_;
  const long rel = std::min(a.N_ - a.v_, b.N_ - b.v_);
  return PadicNumber(p, v + rel, v, a.u_ * b.u_);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
  same_prime(a, b);
  const long p = a.p_;
  if (b.is_zero()) throw Error(ErrorCode::InsufficientPrecision, "p-adic division by zero-to-precision");
  if (a.is_zero()) return PadicNumber::zero(p, a.N_ - b.v_);
  const long v = a.v_ - b.v_;
  const long rel = std::min(a.N_ - a.v_, b.N_ - b.v_);
  mpz_class mod = pow_p(p, rel), inv;
  mpz_invert(inv.get_mpz_t(), b.u_.get_mpz_t(), mod.get_mpz_t());
  return PadicNumber(p, v + rel, v, a.u_ * inv);
}

PadicNumber PadicNumber::pow(long e) const {
  if (e == 0) return from_integer(p_, 1, std::max(relative_precision(), 1L));
  if (e < 0) return pow(0) / pow(-e);
  PadicNumber result = *this, base = *this;
  --e;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

PadicNumber PadicNumber::mul_rational(const Rational& c) const {
  // 1 << 40 stands in for "exactly zero": it only ever enters through min().
  if (c == 0) return zero(p_, 1L << 40);
  const long vc = ck::valuation(c, p_);
  if (is_zero()) return zero(p_, N_ + vc);
  Rational unit = c * power_of(p_, -vc);
  mpz_class mod = pow_p(p_, N_ - v_), inv;
  mpz_invert(inv.get_mpz_t(), unit.get_den().get_mpz_t(), mod.get_mpz_t());
  return PadicNumber(p_, N_ + vc, v_ + vc, u_ * unit.get_num() * inv);
}

PadicNumber PadicNumber::shift(long k) const {
  if (is_zero()) return zero(p_, N_ + k);
  return PadicNumber(p_, N_ + k, v_ + k, u_);
}

PadicNumber PadicNumber::reduce_precision(long N) const {
  if (N >= N_) return *this;
  return PadicNumber(p_, N, v_, u_);
}

bool PadicNumber::agrees_with(const PadicNumber& o, long N) const {
  same_prime(*this, o);
  PadicNumber d = (*this - o);
  long M = std::min({N, N_, o.N_});
  return d.v_ >= M;
}

Approx PadicNumber::to_approx() const { return Approx(p_, to_rational(), N_); }

PadicNumber PadicNumber::from_approx(const Approx& a, long working_precision) {
  long N = std::min(a.precision(), working_precision);
  return from_rational(a.prime(), a.value(), N);
}

PadicNumber teichmuller(long p, const mpz_class& a, long N) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  if (r == 0) throw Error(ErrorCode::DomainError, "teichmuller: residue must be a unit");
  mpz_class mod = pow_p(p, N), e = pow_p(p, N - 1 > 0 ? N - 1 : 0), out;
  // a^{p^{N-1}} converges to omega(a) modulo p^N
  mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return PadicNumber::from_integer(p, out, N);
}

}  // namespace ck
