#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ck/basis.hpp"
#include "ck/geometric.hpp"
#include "ck/padic.hpp"
#include "ck/series.hpp"
#include "ck/sunit.hpp"

namespace ck {

// The six automorphisms of P^1 minus {0, 1, oo}, z -> (az + b)/(cz + d).
struct Moebius {
  int a, b, c, d;
};
constexpr int kMoebiusCount = 6;
const Moebius& moebius(int g);            // 0: z, 1: 1-z, 2: 1/z, 3: 1/(1-z), 4: (z-1)/z, 5: z/(z-1)
int moebius_compose(int outer, int inner);  // index of outer(inner(z))
std::string moebius_name(int g);          // "z", "1-z", ...

// log z (index 0), log(1 - z) (index 1) or Li_k(g z) for k >= 2.
struct ColemanAtom {
  int index = 0;
  int moebius = 0;
  auto operator<=>(const ColemanAtom&) const = default;
  std::string to_string() const;
};
using AtomMonomial = std::vector<ColemanAtom>;  // sorted, with repetition

// Polynomial in the atoms with p-adic coefficients; a locally analytic
// function on the residue disks away from 0, 1 and oo.
class ColemanFunctionExpr {
 public:
  ColemanFunctionExpr() = default;
  ColemanFunctionExpr(long p, long precision) : p_(p), precision_(precision) {}

  // Substitute log -> log z, Li1 -> -log(1 - z), Li_k -> Li_k(z) and every
  // other variable by its value.
  static ColemanFunctionExpr from_polynomial(const Polynomial& f, const std::map<std::string, PadicNumber>& values,
                                             long p, long precision);

  long prime() const { return p_; }
  long precision() const { return precision_; }
  const std::map<AtomMonomial, PadicNumber>& terms() const { return terms_; }
  int max_polylog_index() const;

  void add_term(const AtomMonomial& m, const PadicNumber& c);
  friend ColemanFunctionExpr operator+(const ColemanFunctionExpr& x, const ColemanFunctionExpr& y);
  friend ColemanFunctionExpr operator*(const ColemanFunctionExpr& x, const ColemanFunctionExpr& y);
  ColemanFunctionExpr scaled(const PadicNumber& c) const;

  // z -> f(g z).
  ColemanFunctionExpr precompose(int g) const;
  // Divided by its first coefficient that is nonzero to precision.
  ColemanFunctionExpr monic() const;
  bool same_as(const ColemanFunctionExpr& o) const;

  PadicNumber evaluate(const Rational& z) const;
  // Expansion in t on z = center + t, center a unit off the disks of 0 and 1.
  PadicSeries expand(const PadicNumber& center, long terms) const;

  std::string to_string() const;  // coefficients as small rationals when they are
  nlohmann::ordered_json to_json() const;

 private:
  long p_ = 0;
  long precision_ = 0;
  std::map<AtomMonomial, PadicNumber> terms_;
};

// Closure under z -> 1 - z and z -> 1/z, duplicates up to units removed.
std::vector<ColemanFunctionExpr> symmetrize(const std::vector<ColemanFunctionExpr>& fns);

struct LociOptions {
  std::optional<long> prime;
  BasisSchedule basis_schedule;
  GroebnerBudget groebner_budget;
  std::optional<std::filesystem::path> cache_dir;
};

struct AssembledLoci {
  OpenIntegerScheme scheme;
  int depth = 0;
  long p = 0;
  long precision = 0;  // eps = p^-precision
  IdealPresentation ideal;
  std::map<std::string, PadicNumber> coefficient_values;  // per_p of coefficient variables
  std::optional<PolylogBasis> basis;                      // built only for non-constant coefficients
  std::vector<ColemanFunctionExpr> generators;
  std::vector<ColemanFunctionExpr> symmetrized;
};

// Smallest admissible auxiliary prime for Z: p >= 5 and above every excluded prime.
long default_prime_for(const OpenIntegerScheme& Z);

AssembledLoci assemble_loci(const OpenIntegerScheme& Z, int n, long precision, const LociOptions& options = {});

enum class DiskVerdict { Certified, Indeterminate };

struct BallReport {
  PadicNumber center;
  long radius = 1;  // ball center + p^radius Z_p
  DiskVerdict verdict = DiskVerdict::Indeterminate;
  long bound = -1;     // certified upper bound on locus points in the ball
  long expected = 0;   // known points inside
};

struct DiskReport {
  long residue = 0;
  PadicNumber center;  // Teichmueller representative
  DiskVerdict verdict = DiskVerdict::Indeterminate;
  long bound = -1;
  std::vector<SUnitPoint> known_points;
  std::vector<BallReport> balls;  // leaves of the refinement
};

struct KnownPointCheck {
  SUnitPoint point;
  long min_valuation = 0;  // min over symmetrized generators of v(F(z))
  bool vanishes = false;   // min_valuation >= precision - slack
};

struct LocusReport {
  long p = 0;
  int depth = 0;
  long precision = 0;
  long terms = 0;           // series length used on radius-1 disks
  int max_radius = 1;       // refinement depth
  std::vector<std::string> generators;
  std::vector<DiskReport> disks;
  std::vector<KnownPointCheck> known;
  bool certified = false;  // every disk certified with bound = number of known points

  nlohmann::ordered_json to_json() const;
};

constexpr long kVanishingSlack = 2;

// Certified root counts of the common zeros on every residue disk, refining
// indeterminate balls down to radius max_radius.
LocusReport disk_reports(const std::vector<ColemanFunctionExpr>& fns, long p, long precision,
                         const std::vector<SUnitPoint>& known_points, int max_radius, int jobs = 1);

}  // namespace ck
