#include "ck/series.hpp"

#include <algorithm>

#include "ck/error.hpp"

namespace ck {

long floor_log(long p, long k) {
  long e = 0;
  long x = 1;
  while (k >= 1 && x <= k / p) {
    x *= p;
    ++e;
  }
  return e;
}

long tail_minimum(long p, const TailBound& tail, long slope, long from) {
  if (slope < 1) throw Error(ErrorCode::InvalidArgument, "tail_minimum: slope must be >= 1");
  from = std::max(from, 1L);
  // Between consecutive powers of p the bound grows with k, so the candidates
  // are `from` itself and the powers of p beyond it. Along powers p^e the
  // bound increases once slope * p^e * (p - 1) >= beta.
  long best = tail.at(p, from) + slope * from;
  long pe = 1;
  for (int e = 0; e < 62; ++e) {
    if (pe >= from) {
      best = std::min(best, tail.at(p, pe) + slope * pe);
      if (slope * pe * (p - 1) >= tail.beta) break;
    }
    if (pe > (1L << 55) / p) break;
    pe *= p;
  }
  return best;
}

PadicSeries::PadicSeries(PadicNumber center, std::vector<PadicNumber> coeffs, TailBound tail)
    : center_(std::move(center)), coeffs_(std::move(coeffs)), tail_(tail) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "series needs a constant term");
  tail_.alpha = covering_alpha(center_.prime(), coeffs_, tail_.beta, tail_.alpha);
}

long PadicSeries::covering_alpha(long p, const std::vector<PadicNumber>& coeffs, long beta,
                                 long tail_alpha) {
  long alpha = tail_alpha;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    long lb = coeffs[k].valuation();  // equals precision for zero-to-precision
    alpha = std::min(alpha, lb + beta * floor_log(p, static_cast<long>(k)));
  }
  return alpha;
}

PadicNumber PadicSeries::evaluate(const PadicNumber& t) const {
  const long p = prime();
  const long s = t.valuation();
  if (s < 1) throw Error(ErrorCode::DomainError, "series evaluated outside its disk");
  const long err = tail_minimum(p, tail_, std::min(s, 1L << 20), order() + 1);
  PadicNumber sum = coeffs_[0];
  PadicNumber tk = t;
  for (long k = 1; k <= order(); ++k) {
    sum += coeffs_[k] * tk;
    if (k < order()) tk = tk * t;
  }
  return sum.reduce_precision(err);
}

PadicSeries PadicSeries::truncate(long K) const {
  if (K >= order()) return *this;
  std::vector<PadicNumber> c(coeffs_.begin(), coeffs_.begin() + K + 1);
  long alpha = tail_.alpha;  // the discarded coefficients already respect it
  return PadicSeries(center_, std::move(c), TailBound{alpha, tail_.beta});
}

PadicSeries PadicSeries::scale(const PadicNumber& c) const {
  std::vector<PadicNumber> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a * c);
  return PadicSeries(center_, std::move(out), TailBound{sat_add(tail_.alpha, c.valuation()), tail_.beta});
}

PadicSeries PadicSeries::add_constant(const PadicNumber& c) const {
  auto out = coeffs_;
  out[0] += c;
  return PadicSeries(center_, std::move(out), TailBound{std::min(tail_.alpha, c.valuation()), tail_.beta});
}

namespace {

void check_compatible(const PadicSeries& a, const PadicSeries& b) {
  if (a.prime() != b.prime()) throw Error(ErrorCode::InvalidArgument, "series over different primes");
  long N = std::min(a.center().precision(), b.center().precision());
  if (!a.center().agrees_with(b.center(), N))
    throw Error(ErrorCode::InvalidArgument, "series with different centers");
}

}  // namespace

PadicSeries operator+(const PadicSeries& a, const PadicSeries& b) {
  check_compatible(a, b);
  const long K = std::min(a.order(), b.order());
  std::vector<PadicNumber> c;
  for (long k = 0; k <= K; ++k) c.push_back(a.coeffs_[k] + b.coeffs_[k]);
  TailBound t{std::min(a.tail_.alpha, b.tail_.alpha), std::max(a.tail_.beta, b.tail_.beta)};
  return PadicSeries(a.center_, std::move(c), t);
}

PadicSeries PadicSeries::operator-() const {
  std::vector<PadicNumber> c;
  for (const auto& x : coeffs_) c.push_back(-x);
  return PadicSeries(center_, std::move(c), tail_);
}

PadicSeries operator-(const PadicSeries& a, const PadicSeries& b) { return a + (-b); }

PadicSeries operator*(const PadicSeries& a, const PadicSeries& b) {
  check_compatible(a, b);
  const long K = std::min(a.order(), b.order());
  std::vector<PadicNumber> c;
  for (long k = 0; k <= K; ++k) {
    PadicNumber s = a.coeffs_[0] * b.coeffs_[k];
    for (long i = 1; i <= k; ++i) s += a.coeffs_[i] * b.coeffs_[k - i];
    c.push_back(s);
  }
  TailBound t{sat_add(a.tail_.alpha, b.tail_.alpha), a.tail_.beta + b.tail_.beta};
  return PadicSeries(a.center_, std::move(c), t);
}

PadicSeries PadicSeries::compose(const PadicSeries& inner) const {
  const long K = std::min(order(), inner.order());
  if (!inner.coeffs_[0].is_zero())
    throw Error(ErrorCode::InvalidArgument, "compose: inner series must vanish at the center");
  if (inner.tail_.alpha < 0 || inner.tail_.beta != 0)
    throw Error(ErrorCode::InvalidArgument, "compose: inner series must have integral coefficients");
  // Horner in truncated power series arithmetic.
  std::vector<PadicNumber> acc(static_cast<std::size_t>(K + 1), PadicNumber::zero(prime(), 1L << 40));
  acc[0] = coeffs_[K];
  for (long j = K - 1; j >= 0; --j) {
    std::vector<PadicNumber> next(static_cast<std::size_t>(K + 1), PadicNumber::zero(prime(), 1L << 40));
    for (long a = 0; a <= K; ++a) {
      if (acc[a].is_zero() && acc[a].precision() >= (1L << 39)) continue;
      for (long b = 1; a + b <= K; ++b) next[a + b] += acc[a] * inner.coeffs_[b];
    }
    next[0] = next[0] + coeffs_[j];
    acc = std::move(next);
  }
  return PadicSeries(inner.center_, std::move(acc), tail_);
}

PadicSeries PadicSeries::integrate(const PadicNumber& constant) const {
  std::vector<PadicNumber> c;
  c.push_back(constant);
  for (long k = 1; k <= order(); ++k) c.push_back(coeffs_[k - 1].mul_rational(Rational(1, k)));
  // v(a_{k-1}/k) >= alpha - beta L(k-1) - L(k) >= alpha - (beta + 1) L(k)
  TailBound t{std::min(tail_.alpha, constant.valuation()), tail_.beta + 1};
  return PadicSeries(center_, std::move(c), t);
}

// ------------------------------------------------------------------ Newton polygon

RootCount newton_root_count(const PadicSeries& f, long expected, long radius) {
  const long p = f.prime();
  const long K = f.order();
  const auto& a = f.coeffs();
  // scaled valuations w_k = v(a_k) + radius * k
  long m = kInfinity;
  for (long k = 0; k <= K; ++k)
    if (!a[k].is_zero()) m = std::min(m, a[k].valuation() + radius * k);
  if (m >= kInfinity) return {RootVerdict::Indeterminate, -1};
  if (tail_minimum(p, f.tail(), radius, K + 1) <= m) return {RootVerdict::Indeterminate, -1};
  long d_det = -1, d_und = -1;
  for (long k = 0; k <= K; ++k) {
    long w = a[k].valuation() + radius * k;
    if (!a[k].is_zero()) {
      if (w == m) d_det = k;
    } else if (w <= m) {
      d_und = k;
    }
  }
  long count = std::max(d_det, d_und);
  if (count <= expected) return {RootVerdict::AtMost, count};
  // Refine: only segments of integral slope carry roots in Q_p.
  bool all_determined = true;
  for (long k = 0; k <= d_det; ++k) all_determined = all_determined && !a[k].is_zero();
  if (all_determined && d_und < 0) {
    std::vector<long> w(static_cast<std::size_t>(d_det + 1));
    for (long k = 0; k <= d_det; ++k) w[k] = a[k].valuation() + radius * k;
    long integral = 0;
    long i = 0;
    while (i < d_det) {
      // next hull vertex: minimize slope (w_j - w_i)/(j - i), farthest on ties
      long best_j = i + 1;
      for (long j = i + 2; j <= d_det; ++j) {
        // (w_j - w_i)/(j - i) <= (w_b - w_i)/(b - i)
        if ((w[j] - w[i]) * (best_j - i) <= (w[best_j] - w[i]) * (j - i)) best_j = j;
      }
      if ((w[best_j] - w[i]) % (best_j - i) == 0) integral += best_j - i;
      i = best_j;
    }
    count = integral;
    if (count <= expected) return {RootVerdict::AtMost, count};
    return {RootVerdict::TooMany, count};
  }
  if (d_und > std::max(expected, d_det)) return {RootVerdict::Indeterminate, count};
  return {RootVerdict::TooMany, count};
}

}  // namespace ck
