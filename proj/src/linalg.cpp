#include "ck/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace ck {

long valuation(const mpz_class& x, long p) {
  if (x == 0) return kInfinity;
  mpz_class y = x;
  long v = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

long valuation(const Rational& x, long p) {
  if (x == 0) return kInfinity;
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

long sat_add(long a, long b) {
  if (a >= kInfinity || b >= kInfinity) return kInfinity;
  long s = a + b;
  return std::min(s, kInfinity);
}

Rational power_of(long p, long e) {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(q);
  Rational r(1, q);
  r.canonicalize();
  return r;
}

Rational padic_abs(const Rational& x, long p) {
  if (x == 0) return 0;
  return power_of(p, -valuation(x, p));
}

// ------------------------------------------------------------------ Approx

Approx::Approx(long p, Rational value, long precision)
    : p_(p), value_(std::move(value)), prec_(std::min(precision, kInfinity)) {
  value_.canonicalize();
  canonicalize();
}

long Approx::valuation() const { return p_ == 0 ? kInfinity : ck::valuation(value_, p_); }

long Approx::effective_valuation() const { return std::min(valuation(), prec_); }

void Approx::canonicalize() {
  if (prec_ >= kInfinity || value_ == 0) return;
  if (p_ == 0) throw Error(ErrorCode::InvalidArgument, "approximate value without a prime");
  long e = valuation();
  if (e >= prec_) {
    value_ = 0;
    return;
  }
  // value = p^e * r/s with r, s prime to p; keep r * s^{-1} mod p^{prec - e}
  Rational unit = value_ * power_of(p_, -e);
  mpz_class mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(prec_ - e));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), unit.get_den().get_mpz_t(), mod.get_mpz_t());
  mpz_class res = (unit.get_num() * inv) % mod;
  if (res < 0) res += mod;
  if (2 * res > mod) res -= mod;  // symmetric representative
  value_ = Rational(res) * power_of(p_, e);
}

namespace {

long common_prime(const Approx& a, const Approx& b) {
  if (a.prime() == 0) return b.prime();
  if (b.prime() == 0 || a.prime() == b.prime()) return a.prime();
  throw Error(ErrorCode::InvalidArgument, "approximations over different primes");
}

}  // namespace

Approx Approx::operator-() const {
  Approx r = *this;
  r.value_ = -r.value_;
  return r;
}

Approx operator+(const Approx& a, const Approx& b) {
  return Approx(common_prime(a, b), a.value_ + b.value_, std::min(a.prec_, b.prec_));
}

Approx operator-(const Approx& a, const Approx& b) {
  return Approx(common_prime(a, b), a.value_ - b.value_, std::min(a.prec_, b.prec_));
}

Approx operator*(const Approx& a, const Approx& b) {
  long p = common_prime(a, b);
  long prec = std::min(sat_add(a.prec_, b.effective_valuation()),
                       sat_add(b.prec_, a.effective_valuation()));
  return Approx(p, a.value_ * b.value_, prec);
}

Approx operator/(const Approx& a, const Approx& b) {
  long p = common_prime(a, b);
  if (!b.is_determined())
    throw Error(ErrorCode::InsufficientPrecision, "division by an undetermined quantity");
  long vb = b.valuation();
  long prec = kInfinity;
  if (a.prec_ < kInfinity) prec = a.prec_ - vb;
  if (b.prec_ < kInfinity) {
    long ea = a.effective_valuation();
    if (ea < kInfinity) prec = std::min(prec, ea + b.prec_ - 2 * vb);
    else prec = std::min(prec, a.prec_ + b.prec_ - 2 * vb);
  }
  return Approx(p, a.value_ / b.value_, prec);
}

Approx Approx::with_precision(long prec) const { return Approx(p_, value_, std::min(prec, prec_)); }

std::string Approx::to_string() const {
  if (is_exact()) return value_.get_str();
  return value_.get_str() + " + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
}

// ------------------------------------------------------------------ certificates

namespace {

template <class T>
long entry_valuation(const T& x, long p);

template <>
long entry_valuation<Rational>(const Rational& x, long p) {
  return valuation(x, p);
}

template <>
long entry_valuation<Approx>(const Approx& x, long) {
  return x.is_determined() ? x.valuation() : kInfinity;
}

template <class T>
std::optional<MinorWitness> largest_minor_impl(std::vector<std::vector<T>> rows, long p) {
  const std::size_t d = rows.size();
  if (d == 0) return MinorWitness{{}, 0};
  const std::size_t n = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != n) throw Error(ErrorCode::DimensionMismatch, "ragged vectors");
  if (d > n) throw Error(ErrorCode::DimensionMismatch, "more vectors than coordinates");
  std::vector<bool> used(n, false);
  MinorWitness w{{}, 0};
  for (std::size_t k = 0; k < d; ++k) {
    long best = kInfinity;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = k; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (used[j]) continue;
        long v = entry_valuation(rows[i][j], p);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best >= kInfinity) return std::nullopt;
    std::swap(rows[k], rows[bi]);
    used[bj] = true;
    w.columns.push_back(bj);
    w.valuation += best;
    const T piv = rows[k][bj];
    for (std::size_t i = k + 1; i < d; ++i) {
      const T f = rows[i][bj] / piv;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = rows[i][j] - f * rows[k][j];
    }
  }
  std::sort(w.columns.begin(), w.columns.end());
  return w;
}

}  // namespace

std::optional<MinorWitness> largest_minor(const std::vector<std::vector<Rational>>& rows, long p) {
  return largest_minor_impl(rows, p);
}

std::optional<MinorWitness> largest_minor(const std::vector<std::vector<Approx>>& rows) {
  long p = 0;
  for (const auto& r : rows)
    for (const auto& x : r) p = std::max(p, x.prime());
  return largest_minor_impl(rows, p);
}

bool eps_linearly_independent(const std::vector<std::vector<Rational>>& rows,
                              const EpsilonContext& ctx) {
  auto w = largest_minor(rows, ctx.p);
  return w && w->valuation < ctx.N;
}

bool eps_linearly_independent(const std::vector<std::vector<Approx>>& rows,
                              const EpsilonContext& ctx) {
  auto w = largest_minor(rows);
  return w && w->valuation < ctx.N;
}

Rational determinant(const RationalMatrix& m0) {
  if (m0.rows() != m0.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant: not square");
  RationalMatrix m = m0;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      m.swap_rows(piv, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

bool eps_linearly_independent_by_minors(const std::vector<std::vector<Rational>>& rows,
                                        const EpsilonContext& ctx) {
  const std::size_t d = rows.size();
  if (d == 0) return true;
  const std::size_t n = rows[0].size();
  if (d > n) throw Error(ErrorCode::DimensionMismatch, "more vectors than coordinates");
  std::vector<std::size_t> cols(d);
  std::iota(cols.begin(), cols.end(), 0);
  while (true) {
    RationalMatrix sub(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) sub(i, j) = rows[i][cols[j]];
    Rational det = determinant(sub);
    if (det != 0 && valuation(det, ctx.p) < ctx.N) return true;
    // next combination in lexicographic order
    std::size_t i = d;
    while (i > 0 && cols[i - 1] == n - d + (i - 1)) --i;
    if (i == 0) return false;
    ++cols[i - 1];
    for (std::size_t j = i; j < d; ++j) cols[j] = cols[j - 1] + 1;
  }
}

Rational perturbation_threshold(const std::vector<std::vector<Rational>>& rows,
                                const EpsilonContext& ctx) {
  auto w = largest_minor(rows, ctx.p);
  if (!w || w->valuation >= ctx.N)
    throw Error(ErrorCode::NotIndependent, "perturbation_threshold: vectors not eps-independent");
  const std::size_t d = rows.size();
  RationalMatrix a(d, d);
  Rational r_prime = 1;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      a(i, j) = rows[i][w->columns[j]];
      r_prime = std::max(r_prime, padic_abs(a(i, j), ctx.p));
    }
  // Delta_i: norm of v -> det(A with row i replaced by v) = max_j |cofactor(i, j)|.
  // Cofactors are the entries of the adjugate det(A) * A^{-1} (transposed).
  Rational det = determinant(a);
  RationalMatrix aug(d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug(i, j) = a(i, j);
    aug(i, d + i) = 1;
  }
  auto ech = row_reduce(aug);
  Rational delta = 1;
  for (std::size_t k = 1; k < d; ++k) delta *= r_prime;  // R'^{d-1} bounds mixed minors
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Rational cof = det * ech.matrix(j, d + i);  // cofactor(i, j) = det * (A^{-1})_{j,i}
      delta = std::max(delta, padic_abs(cof, ctx.p));
    }
  return ctx.eps() / (Rational(2 * static_cast<long>(d)) * delta);
}

}  // namespace ck
