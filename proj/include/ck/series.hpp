#pragma once

#include <vector>

#include "ck/padic.hpp"

namespace ck {

// floor(log_p k) for k >= 1, and 0 for k = 0.
long floor_log(long p, long k);

// Lower bound v(a_k) >= alpha - beta * floor(log_p k), valid for every k >= 0
// (retained coefficients included, which keeps sums/products/compositions sound).
struct TailBound {
  long alpha = 0;
  long beta = 0;
  long at(long p, long k) const { return alpha - beta * floor_log(p, k); }
  bool operator==(const TailBound&) const = default;
};

// min over k >= from of (alpha - beta * floor_log(p, k) + slope * k), slope >= 1.
long tail_minimum(long p, const TailBound& tail, long slope, long from);

// Power series sum a_k t^k in z = center + t on a disk |t| <= p^{-1}.
class PadicSeries {
 public:
  PadicSeries() = default;
  PadicSeries(PadicNumber center, std::vector<PadicNumber> coeffs, TailBound tail);

  long prime() const { return center_.prime(); }
  const PadicNumber& center() const { return center_; }
  const std::vector<PadicNumber>& coeffs() const { return coeffs_; }
  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  const TailBound& tail() const { return tail_; }

  // Evaluate at t with v(t) >= 1, folding the tail estimate into the precision.
  PadicNumber evaluate(const PadicNumber& t) const;
  // Keep coefficients 0..K, weakening alpha so the bound still covers them.
  PadicSeries truncate(long K) const;
  PadicSeries scale(const PadicNumber& c) const;
  PadicSeries add_constant(const PadicNumber& c) const;

  friend PadicSeries operator+(const PadicSeries& a, const PadicSeries& b);
  friend PadicSeries operator-(const PadicSeries& a, const PadicSeries& b);
  friend PadicSeries operator*(const PadicSeries& a, const PadicSeries& b);
  PadicSeries operator-() const;

  // this(inner(t)) where inner has zero constant term and integral coefficients.
  PadicSeries compose(const PadicSeries& inner) const;
  // Antiderivative with the given constant term (beta grows by one).
  PadicSeries integrate(const PadicNumber& constant) const;

  // Recompute alpha as the tightest value covering retained coefficients and
  // the given bound for the unseen tail.
  static long covering_alpha(long p, const std::vector<PadicNumber>& coeffs, long beta,
                             long tail_alpha);

 private:
  PadicNumber center_;
  std::vector<PadicNumber> coeffs_;
  TailBound tail_;
};

enum class RootVerdict { AtMost, TooMany, Indeterminate };

struct RootCount {
  RootVerdict verdict;
  long count;  // upper bound on roots in Z_p of the ball (meaningful unless Indeterminate)
};

// Newton-polygon root count of f on the ball |t| <= p^{-radius}. Counts roots
// of integral valuation only (roots of non-integral valuation are not in Q_p).
RootCount newton_root_count(const PadicSeries& f, long expected, long radius = 1);

}  // namespace ck
