#pragma once

#include <gmpxx.h>

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ck/error.hpp"

namespace ck {

using Rational = mpq_class;

// Valuation "infinity" and the precision of exactly known values.
inline constexpr long kInfinity = std::numeric_limits<long>::max() / 4;

long valuation(const mpz_class& x, long p);
long valuation(const Rational& x, long p);
// Saturating addition on valuations/precisions.
long sat_add(long a, long b);
// |x|_p as an exact rational (0 for x = 0).
Rational padic_abs(const Rational& x, long p);
Rational power_of(long p, long e);  // p^e, e may be negative

// A rational approximation of a p-adic quantity: the true value differs from
// value() by something of valuation >= precision(). Exact data has precision
// kInfinity. Values are kept reduced modulo p^precision.
class Approx {
 public:
  Approx() = default;
  Approx(long p, Rational value, long precision = kInfinity);
  static Approx exact(long p, Rational value) { return Approx(p, std::move(value)); }

  long prime() const { return p_; }
  const Rational& value() const { return value_; }
  long precision() const { return prec_; }
  bool is_exact() const { return prec_ >= kInfinity; }
  long valuation() const;
  // min(valuation, precision): a guaranteed lower bound for the true valuation.
  long effective_valuation() const;
  // True when the value is provably nonzero.
  bool is_determined() const { return valuation() < prec_; }

  Approx operator-() const;
  friend Approx operator+(const Approx& a, const Approx& b);
  friend Approx operator-(const Approx& a, const Approx& b);
  friend Approx operator*(const Approx& a, const Approx& b);
  friend Approx operator/(const Approx& a, const Approx& b);
  Approx& operator+=(const Approx& o) { return *this = *this + o; }
  Approx& operator-=(const Approx& o) { return *this = *this - o; }
  Approx& operator*=(const Approx& o) { return *this = *this * o; }
  bool operator==(const Approx& o) const { return value_ == o.value_ && prec_ == o.prec_; }
  Approx with_precision(long prec) const;

  std::string to_string() const;

 private:
  void canonicalize();
  long p_ = 0;
  Rational value_ = 0;
  long prec_ = kInfinity;
};

// ------------------------------------------------------------------ scalar traits

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static bool is_zero(const Rational& x) { return x == 0; }
  // Lower is a better pivot. Exact arithmetic: any nonzero entry will do.
  static long pivot_score(const Rational& x) { return x == 0 ? kInfinity : 0; }
  static bool is_exact_zero(const Rational& x) { return x == 0; }
  static Rational zero_like(const Rational&) { return 0; }
  static Rational one_like(const Rational&) { return 1; }
};

template <>
struct ScalarTraits<Approx> {
  static bool is_zero(const Approx& x) { return !x.is_determined(); }
  static long pivot_score(const Approx& x) { return x.is_determined() ? x.valuation() : kInfinity; }
  static bool is_exact_zero(const Approx& x) { return x.is_exact() && x.value() == 0; }
  static Approx zero_like(const Approx& x) { return Approx(x.prime(), 0); }
  static Approx one_like(const Approx& x) { return Approx(x.prime(), 1); }
};

// ------------------------------------------------------------------ matrices

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows) {
      if (r.size() != m.cols_) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
      m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
  }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using ApproxMatrix = Matrix<Approx>;

template <class T>
struct Echelon {
  Matrix<T> matrix;             // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Row reduction with per-column best-pivot choice (exact: first nonzero;
// approximate: smallest valuation among determined entries).
template <class T>
Echelon<T> row_reduce(Matrix<T> m) {
  using Tr = ScalarTraits<T>;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    long best_score = kInfinity;
    for (std::size_t i = r; i < m.rows(); ++i) {
      long s = Tr::pivot_score(m(i, c));
      if (s < best_score) {
        best_score = s;
        best = i;
      }
    }
    if (best == m.rows()) continue;
    m.swap_rows(r, best);
    T inv = Tr::one_like(m(r, c)) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || Tr::is_exact_zero(m(i, c))) continue;
      // approximate entries keep their error after elimination
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return row_reduce(m).pivots.size();
}

// Basis of {x : M x = 0}, one vector per free column, in reduced echelon form.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m, const T& prototype = T()) {
  using Tr = ScalarTraits<T>;
  auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols(), Tr::zero_like(prototype));
    v[f] = Tr::one_like(prototype);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.matrix(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

// Solves M x = b; nullopt when inconsistent. Free variables are set to zero.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b,
                                    const T& prototype = T()) {
  using Tr = ScalarTraits<T>;
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: rhs size");
  Matrix<T> aug(m.rows(), m.cols() + 1, Tr::zero_like(prototype));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto ech = row_reduce(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  for (std::size_t r = ech.pivots.size(); r < m.rows(); ++r)
    if (!Tr::is_zero(ech.matrix(r, m.cols()))) return std::nullopt;
  std::vector<T> x(m.cols(), Tr::zero_like(prototype));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.matrix(r, m.cols());
  return x;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot: length mismatch");
  if (a.empty()) return T();
  T s = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

// Orthogonal projection of target onto span(spanning) under the standard inner
// product, returned as coordinates in the spanning vectors (Gram system).
template <class T>
std::vector<T> project_coefficients(const std::vector<T>& target,
                                    const std::vector<std::vector<T>>& spanning) {
  const std::size_t d = spanning.size();
  if (d == 0) return {};
  Matrix<T> gram(d, d);
  std::vector<T> rhs(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) gram(i, j) = dot(spanning[i], spanning[j]);
    rhs[i] = dot(target, spanning[i]);
  }
  auto ech = row_reduce(gram);
  if (ech.pivots.size() < d)
    throw Error(ErrorCode::NotIndependent, "project_coefficients: dependent spanning set");
  auto x = solve(gram, rhs, target.empty() ? T() : target[0]);
  if (!x) throw Error(ErrorCode::NotIndependent, "project_coefficients: singular Gram system");
  return *x;
}

// ------------------------------------------------------------------ epsilon certificates

// eps = p^{-N}.
struct EpsilonContext {
  long p;
  long N;
  Rational eps() const { return power_of(p, -N); }
};

struct MinorWitness {
  std::vector<std::size_t> columns;
  long valuation;  // v_p of the witnessing d x d minor
};

// Largest-absolute-value d x d minor via complete pivoting (ultrametric:
// the product of maximal pivots realizes max |minor|). nullopt if the rows are
// (numerically) dependent.
std::optional<MinorWitness> largest_minor(const std::vector<std::vector<Rational>>& rows, long p);
std::optional<MinorWitness> largest_minor(const std::vector<std::vector<Approx>>& rows);

bool eps_linearly_independent(const std::vector<std::vector<Rational>>& rows,
                              const EpsilonContext& ctx);
bool eps_linearly_independent(const std::vector<std::vector<Approx>>& rows,
                              const EpsilonContext& ctx);
// Reference implementation: minors in lexicographic column order, early exit.
bool eps_linearly_independent_by_minors(const std::vector<std::vector<Rational>>& rows,
                                        const EpsilonContext& ctx);

Rational determinant(const RationalMatrix& m);
Rational perturbation_threshold(const std::vector<std::vector<Rational>>& rows,
                                const EpsilonContext& ctx);

}  // namespace ck
