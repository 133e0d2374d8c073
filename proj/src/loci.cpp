#include "ck/loci.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <thread>

#include "ck/basis_io.hpp"
#include "ck/error.hpp"
#include "ck/polylog.hpp"

namespace ck {

// ------------------------------------------------------------------ S3

namespace {

constexpr Moebius kMoebius[kMoebiusCount] = {
    {1, 0, 0, 1},    // z
    {-1, 1, 0, 1},   // 1 - z
    {0, 1, 1, 0},    // 1/z
    {0, 1, -1, 1},   // 1/(1 - z)
    {1, -1, 1, 0},   // (z - 1)/z
    {1, 0, 1, -1},   // z/(z - 1)
};
const char* kMoebiusNames[kMoebiusCount] = {"z", "1-z", "1/z", "1/(1-z)", "(z-1)/z", "z/(z-1)"};

bool projectively_equal(const Moebius& x, const Moebius& y) {
  return (x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d) ||
         (x.a == -y.a && x.b == -y.b && x.c == -y.c && x.d == -y.d);
}

}  // namespace

const Moebius& moebius(int g) {
  if (g < 0 || g >= kMoebiusCount) throw Error(ErrorCode::InvalidArgument, "no such Moebius move");
  return kMoebius[g];
}

int moebius_compose(int outer, int inner) {
  const Moebius& x = moebius(outer);
  const Moebius& y = moebius(inner);
  const Moebius m{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  for (int g = 0; g < kMoebiusCount; ++g)
    if (projectively_equal(m, kMoebius[g])) return g;
  throw Error(ErrorCode::Inconsistent, "S3 not closed under composition");
}

std::string moebius_name(int g) {
  moebius(g);  // range check
  return kMoebiusNames[g];
}

std::string ColemanAtom::to_string() const {
  if (index == 0) return "log(z)";
  if (index == 1) return "log(1-z)";
  return "Li" + std::to_string(index) + "(" + moebius_name(moebius) + ")";
}

// ------------------------------------------------------------------ expressions

namespace {

PadicNumber one(long p, long N) { return PadicNumber::from_integer(p, 1, N); }

AtomMonomial merge(const AtomMonomial& a, const AtomMonomial& b) {
  AtomMonomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ColemanFunctionExpr atom_expr(long p, long N, const ColemanAtom& atom, long sign = 1) {
  ColemanFunctionExpr e(p, N);
  e.add_term({atom}, PadicNumber::from_integer(p, sign, N));
  return e;
}

// log(g z) through log z and log(1 - z); log(-1) = 0 on the Iwasawa branch.
ColemanFunctionExpr log_of_moebius(long p, long N, int g) {
  const ColemanAtom L0{0, 0}, L1{1, 0};
  switch (g) {
    case 0: return atom_expr(p, N, L0);
    case 1: return atom_expr(p, N, L1);
    case 2: return atom_expr(p, N, L0, -1);
    case 3: return atom_expr(p, N, L1, -1);
    case 4: return atom_expr(p, N, L1) + atom_expr(p, N, L0, -1);
    case 5: return atom_expr(p, N, L0) + atom_expr(p, N, L1, -1);
  }
  throw Error(ErrorCode::InvalidArgument, "no such Moebius move");
}

std::optional<int> polylog_index(const std::string& name) {
  if (name.size() < 3 || name.compare(0, 2, "Li") != 0) return std::nullopt;
  for (std::size_t i = 2; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  return std::stoi(name.substr(2));
}

// a/b with |a|, b <= sqrt(m/2) congruent to x modulo m, if any.
std::optional<Rational> rational_reconstruction(const mpz_class& x, const mpz_class& m) {
  mpz_class bound = sqrt(m / 2);
  mpz_class r0 = m, r1 = x % m, s0 = 0, s1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  mpz_class g = gcd(s1, m);
  if (g != 1) return std::nullopt;
  Rational out(r1, s1);
  out.canonicalize();
  return out;
}

std::string format_coefficient(const PadicNumber& c) {
  if (c.is_zero()) return "O(" + std::to_string(c.prime()) + "^" + std::to_string(c.precision()) + ")";
  const long rel = c.relative_precision();
  if (rel >= 4) {
    if (auto r = rational_reconstruction(c.unit(), pow_p(c.prime(), rel))) {
      Rational v = *r * power_of(c.prime(), c.valuation());
      if (abs(v.get_num()) < 100000 && v.get_den() < 100000) return v.get_str();
    }
  }
  return "(" + c.to_string() + ")";
}

}  // namespace

void ColemanFunctionExpr::add_term(const AtomMonomial& m, const PadicNumber& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) terms_.emplace(m, c.reduce_precision(precision_));
  else it->second = (it->second + c).reduce_precision(precision_);
}

ColemanFunctionExpr operator+(const ColemanFunctionExpr& x, const ColemanFunctionExpr& y) {
  ColemanFunctionExpr out = x;
  for (const auto& [m, c] : y.terms_) out.add_term(m, c);
  return out;
}

ColemanFunctionExpr operator*(const ColemanFunctionExpr& x, const ColemanFunctionExpr& y) {
  ColemanFunctionExpr out(x.p_, std::min(x.precision_, y.precision_));
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) out.add_term(merge(mx, my), cx * cy);
  return out;
}

ColemanFunctionExpr ColemanFunctionExpr::scaled(const PadicNumber& c) const {
  ColemanFunctionExpr out(p_, precision_);
  for (const auto& [m, x] : terms_) out.add_term(m, x * c);
  return out;
}

int ColemanFunctionExpr::max_polylog_index() const {
  int k = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& a : m) k = std::max(k, a.index);
  return k;
}

ColemanFunctionExpr ColemanFunctionExpr::from_polynomial(const Polynomial& f,
                                                         const std::map<std::string, PadicNumber>& values, long p,
                                                         long precision) {
  const PolyRing& ring = *f.ring();
  ColemanFunctionExpr out(p, precision);
  for (const auto& [mono, coeff] : f.terms()) {
    ColemanFunctionExpr term(p, precision);
    term.add_term({}, PadicNumber::from_rational(p, coeff, precision));
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      const std::string& name = ring.variable(i).name;
      ColemanFunctionExpr factor(p, precision);
      if (name == "log") {
        factor = atom_expr(p, precision, {0, 0});
      } else if (auto k = polylog_index(name)) {
        factor = *k == 1 ? atom_expr(p, precision, {1, 0}, -1) : atom_expr(p, precision, {*k, 0});
      } else {
        auto it = values.find(name);
        if (it == values.end()) throw Error(ErrorCode::InvalidArgument, "no p-adic value for coefficient " + name);
        factor.add_term({}, it->second);
      }
      for (int e = 0; e < mono[i]; ++e) term = term * factor;
    }
    out = out + term;
  }
  return out;
}

ColemanFunctionExpr ColemanFunctionExpr::precompose(int g) const {
  ColemanFunctionExpr out(p_, precision_);
  for (const auto& [mono, c] : terms_) {
    ColemanFunctionExpr term(p_, precision_);
    term.add_term({}, c);
    for (const auto& a : mono) {
      if (a.index == 0) term = term * log_of_moebius(p_, precision_, g);
      else if (a.index == 1) term = term * log_of_moebius(p_, precision_, moebius_compose(1, g));
      else term = term * atom_expr(p_, precision_, {a.index, moebius_compose(a.moebius, g)});
    }
    out = out + term;
  }
  return out;
}

ColemanFunctionExpr ColemanFunctionExpr::monic() const {
  for (const auto& [m, c] : terms_) {
    if (c.is_zero()) continue;
    const PadicNumber inv = one(p_, precision_) / c;
    ColemanFunctionExpr out(p_, precision_);
    for (const auto& [m2, c2] : terms_) out.add_term(m2, c2 * inv);
    return out;
  }
  return *this;
}

bool ColemanFunctionExpr::same_as(const ColemanFunctionExpr& o) const {
  auto nonzero = [](const ColemanFunctionExpr& e) {
    std::vector<std::pair<AtomMonomial, PadicNumber>> v;
    for (const auto& kv : e.terms_)
      if (!kv.second.is_zero()) v.push_back(kv);
    return v;
  };
  const auto a = nonzero(*this), b = nonzero(o);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first) return false;
    if (!a[i].second.agrees_with(b[i].second, std::min(a[i].second.precision(), b[i].second.precision())))
      return false;
  }
  return true;
}

PadicNumber ColemanFunctionExpr::evaluate(const Rational& z) const {
  if (z == 0 || z == 1) throw Error(ErrorCode::DomainError, "Coleman functions are not evaluated at 0 or 1");
  std::map<ColemanAtom, PadicNumber> cache;
  auto atom_value = [&](const ColemanAtom& a) -> const PadicNumber& {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    PadicNumber v;
    if (a.index == 0) {
      v = padic_log(p_, z, precision_);
    } else if (a.index == 1) {
      v = padic_log(p_, Rational(1 - z), precision_);
    } else {
      const Moebius& g = moebius(a.moebius);
      Rational gz = Rational(g.a * z + g.b) / Rational(g.c * z + g.d);
      v = padic_polylog(a.index, p_, gz, precision_);
    }
    return cache.emplace(a, v).first->second;
  };
  PadicNumber sum = PadicNumber::zero(p_, precision_);
  for (const auto& [mono, c] : terms_) {
    PadicNumber t = c;
    for (const auto& a : mono) t *= atom_value(a);
    sum += t;
  }
  return sum;
}

PadicSeries ColemanFunctionExpr::expand(const PadicNumber& center, long K) const {
  const long p = p_;
  const long N = precision_;
  const PadicNumber y = center.reduce_precision(N);
  const PadicNumber oneN = one(p, N);
  auto zero_series = [&] {
    return PadicSeries(y, std::vector<PadicNumber>(static_cast<std::size_t>(K + 1), PadicNumber::zero(p, N)),
                       TailBound{N, 0});
  };
  auto moebius_at = [&](int g) {
    const Moebius& m = moebius(g);
    const PadicNumber den = y.mul_rational(m.c) + oneN.mul_rational(m.d);
    return (y.mul_rational(m.a) + oneN.mul_rational(m.b)) / den;
  };
  // g(y + t) - g(y) = sum_k det/(cy+d)^2 (-c/(cy+d))^{k-1} t^k
  auto inner_series = [&](int g) {
    const Moebius& m = moebius(g);
    const PadicNumber den = y.mul_rational(m.c) + oneN.mul_rational(m.d);
    if (den.valuation() != 0) throw Error(ErrorCode::DomainError, "Moebius move sends the disk to infinity");
    const PadicNumber lead = oneN.mul_rational(m.a * m.d - m.b * m.c) / (den * den);
    const PadicNumber ratio = oneN.mul_rational(-m.c) / den;
    std::vector<PadicNumber> c{PadicNumber::zero(p, 1L << 40)};
    PadicNumber x = lead;
    for (long k = 1; k <= K; ++k) {
      c.push_back(x);
      x *= ratio;
    }
    return PadicSeries(y, std::move(c), TailBound{0, 0});
  };
  std::map<int, std::vector<PadicSeries>> towers;  // per Moebius move, already composed
  std::map<ColemanAtom, PadicSeries> atoms;
  auto tower = [&](int g, int k) -> const PadicSeries& {
    auto& t = towers[g];
    if (static_cast<int>(t.size()) < k) {
      t.clear();
      int top = 0;
      for (const auto& [mono, c] : terms_)
        for (const auto& a : mono)
          if (a.index >= 2 && a.moebius == g) top = std::max(top, a.index);
      top = std::max(top, k);
      auto raw = polylog_tower(top, moebius_at(g), K, N);
      if (g == 0) t = std::move(raw);
      else {
        const PadicSeries inner = inner_series(g);
        for (auto& s : raw) t.push_back(s.compose(inner));
      }
    }
    return t[k - 1];
  };
  auto atom_series = [&](const ColemanAtom& a) -> const PadicSeries& {
    auto it = atoms.find(a);
    if (it != atoms.end()) return it->second;
    PadicSeries s;
    if (a.index == 0) s = expand_log_series(y, K, N);
    else if (a.index == 1) s = expand_log_series(oneN - y, K, N).compose(inner_series(1));
    else s = tower(a.moebius, a.index);
    return atoms.emplace(a, std::move(s)).first->second;
  };
  PadicSeries sum = zero_series();
  for (const auto& [mono, c] : terms_) {
    PadicSeries t = zero_series().add_constant(c);
    for (const auto& a : mono) t = t * atom_series(a);
    sum = sum + t;
  }
  return sum;
}

std::string ColemanFunctionExpr::to_string() const {
  std::string s;
  for (const auto& [mono, c] : terms_) {
    if (c.is_zero()) continue;
    std::string coeff = format_coefficient(c);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (s.empty()) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    std::string factors;
    for (std::size_t i = 0; i < mono.size();) {
      std::size_t j = i;
      while (j < mono.size() && mono[j] == mono[i]) ++j;
      factors += (factors.empty() ? "" : "*") + mono[i].to_string();
      if (j - i > 1) factors += "^" + std::to_string(j - i);
      i = j;
    }
    if (factors.empty()) s += coeff;
    else if (coeff == "1") s += factors;
    else s += coeff + "*" + factors;
  }
  return s.empty() ? "0" : s;
}

nlohmann::ordered_json ColemanFunctionExpr::to_json() const {
  nlohmann::ordered_json j;
  j["expression"] = to_string();
  j["precision"] = precision_;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [mono, c] : terms_) {
    nlohmann::ordered_json t;
    t["atoms"] = nlohmann::ordered_json::array();
    for (const auto& a : mono) t["atoms"].push_back(a.to_string());
    t["coefficient"] = padic_to_json(c);
    j["terms"].push_back(std::move(t));
  }
  return j;
}

std::vector<ColemanFunctionExpr> symmetrize(const std::vector<ColemanFunctionExpr>& fns) {
  std::vector<ColemanFunctionExpr> out;
  auto insert = [&](const ColemanFunctionExpr& f) {
    ColemanFunctionExpr m = f.monic();
    bool nonzero = false;
    for (const auto& kv : m.terms()) nonzero = nonzero || !kv.second.is_zero();
    if (!nonzero) return;
    for (const auto& g : out)
      if (g.same_as(m)) return;
    out.push_back(std::move(m));
  };
  for (const auto& f : fns) insert(f);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int move : {1, 2}) insert(out[i].precompose(move));
  return out;
}

// ------------------------------------------------------------------ assembly

long default_prime_for(const OpenIntegerScheme& Z) { return default_auxiliary_prime(Z.largest_excluded_or_two()); }

namespace {

long working_precision(long precision, int n) { return precision + 2 * n + 4; }

}  // namespace

AssembledLoci assemble_loci(const OpenIntegerScheme& Z, int n, long precision, const LociOptions& options) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "depth must be >= 1");
  if (precision < 1) throw Error(ErrorCode::InvalidArgument, "precision must be >= 1");
  AssembledLoci out;
  out.scheme = Z;
  out.depth = n;
  out.precision = precision;
  out.p = options.prime.value_or(default_prime_for(Z));
  if (!is_prime(out.p) || out.p < 3) throw Error(ErrorCode::InvalidArgument, "auxiliary prime must be an odd prime");
  const auto S = Z.excluded_primes();
  for (long q : S)
    if (q >= out.p) throw Error(ErrorCode::InvalidArgument, "auxiliary prime must exceed every excluded prime");
  const long W = working_precision(precision, n);

  const auto alphabet = geometric_alphabet(S, n);
  GoncharovAlgebra goncharov(alphabet);
  out.ideal = eliminate(ev_sharp(alphabet, n), goncharov, options.groebner_budget);

  // Coefficient variables that actually occur, and the weight they need.
  int needed_weight = 0;
  std::vector<std::string> used;
  for (std::size_t i = 0; i < out.ideal.ring->size(); ++i) {
    const std::string& name = out.ideal.ring->variable(i).name;
    if (!out.ideal.coefficients.count(name)) continue;
    bool occurs = false;
    for (const auto& g : out.ideal.generators) occurs = occurs || g.uses_variable(static_cast<int>(i));
    if (!occurs) continue;
    used.push_back(name);
    needed_weight = std::max(needed_weight, out.ideal.coefficients.at(name).max_weight());
  }
  if (!used.empty()) {
    BasisSchedule schedule = options.basis_schedule;
    schedule.initial_precision = std::max(schedule.initial_precision, precision);
    BasisResult basis = cached_build_basis(Z.largest_excluded_or_two(), std::max(needed_weight, 1), schedule, out.p,
                                           options.cache_dir);
    for (const auto& name : used) {
      const Approx v = motivic_period(out.ideal.coefficients.at(name), basis.basis, basis.table);
      out.coefficient_values.emplace(name, PadicNumber::from_approx(v, W));
    }
    out.basis = std::move(basis.basis);
  }
  for (const auto& g : out.ideal.generators)
    out.generators.push_back(ColemanFunctionExpr::from_polynomial(g, out.coefficient_values, out.p, W));
  out.symmetrized = symmetrize(out.generators);
  return out;
}

// ------------------------------------------------------------------ disks

namespace {

struct BallContext {
  const std::vector<ColemanFunctionExpr>& fns;
  long p;
  long precision;
  long working;
  int max_radius;
  int depth;
};

long terms_for_radius(const BallContext& ctx, long radius) { return ctx.working / radius + 3 * ctx.depth + 10; }

bool in_ball(const Rational& z, const PadicNumber& center, long radius) {
  const PadicNumber zz = PadicNumber::from_rational(center.prime(), z, center.precision());
  return (zz - center).valuation() >= radius;
}

// Returns (certified, bound) and appends the leaves.
std::pair<bool, long> examine_ball(const BallContext& ctx, const PadicNumber& center, long radius,
                                   const std::vector<SUnitPoint>& known, std::vector<BallReport>& leaves) {
  const long expected = static_cast<long>(known.size());
  const long K = terms_for_radius(ctx, radius);
  long bound = -1;
  for (const auto& f : ctx.fns) {
    const RootCount rc = newton_root_count(f.expand(center, K), expected, radius);
    if (rc.verdict == RootVerdict::Indeterminate) continue;
    if (bound < 0 || rc.count < bound) bound = rc.count;
    if (bound <= expected) break;
  }
  if (bound >= 0 && bound <= expected) {
    leaves.push_back({center, radius, DiskVerdict::Certified, bound, expected});
    return {true, bound};
  }
  if (radius >= ctx.max_radius) {
    leaves.push_back({center, radius, DiskVerdict::Indeterminate, bound, expected});
    return {false, bound};
  }
  bool all = true;
  long total = 0;
  const PadicNumber step = PadicNumber::from_integer(ctx.p, pow_p(ctx.p, radius), ctx.working);
  for (long j = 0; j < ctx.p; ++j) {
    const PadicNumber c = center + step.mul_rational(j);
    std::vector<SUnitPoint> inside;
    for (const auto& z : known)
      if (in_ball(z.value, c, radius + 1)) inside.push_back(z);
    auto [ok, b] = examine_ball(ctx, c, radius + 1, inside, leaves);
    all = all && ok;
    total = (b < 0 || total < 0) ? -1 : total + b;
  }
  return {all, total};
}

}  // namespace

LocusReport disk_reports(const std::vector<ColemanFunctionExpr>& fns, long p, long precision,
                         const std::vector<SUnitPoint>& known_points, int max_radius, int jobs) {
  if (max_radius < 1) throw Error(ErrorCode::InvalidArgument, "refinement depth must be >= 1");
  int depth = 1;
  long working = precision;
  for (const auto& f : fns) {
    if (f.prime() != p) throw Error(ErrorCode::InvalidArgument, "generator over a different prime");
    depth = std::max(depth, f.max_polylog_index());
    working = std::max(working, f.precision());
  }
  LocusReport report;
  report.p = p;
  report.depth = depth;
  report.precision = precision;
  report.max_radius = max_radius;
  for (const auto& f : fns) report.generators.push_back(f.to_string());
  const BallContext ctx{fns, p, precision, working, max_radius, depth};
  report.terms = terms_for_radius(ctx, 1);

  for (const auto& z : known_points) {
    if (z.is_tangential()) continue;
    KnownPointCheck check{z, kInfinity, false};
    for (const auto& f : fns) check.min_valuation = std::min(check.min_valuation, f.evaluate(z.value).valuation());
    check.vanishes = check.min_valuation >= precision - kVanishingSlack;
    report.known.push_back(std::move(check));
  }

  report.disks.resize(static_cast<std::size_t>(p - 2));
  std::atomic<long> next{2};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(std::max(jobs, 1)));
  auto worker = [&](int id) {
    try {
      for (long r = next++; r < p; r = next++) {
        DiskReport& d = report.disks[static_cast<std::size_t>(r - 2)];
        d.residue = r;
        d.center = teichmuller(p, r, working);
        for (const auto& z : known_points)
          if (!z.is_tangential() && in_ball(z.value, d.center, 1)) d.known_points.push_back(z);
        auto [ok, bound] = examine_ball(ctx, d.center, 1, d.known_points, d.balls);
        d.verdict = ok ? DiskVerdict::Certified : DiskVerdict::Indeterminate;
        d.bound = bound;
      }
    } catch (...) {
      errors[static_cast<std::size_t>(id)] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < jobs; ++i) pool.emplace_back(worker, i);
  worker(0);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  report.certified = true;
  for (const auto& d : report.disks)
    report.certified = report.certified && d.verdict == DiskVerdict::Certified &&
                       d.bound == static_cast<long>(d.known_points.size());
  for (const auto& k : report.known) report.certified = report.certified && k.vanishes;
  return report;
}

nlohmann::ordered_json LocusReport::to_json() const {
  using J = nlohmann::ordered_json;
  J j;
  j["format"] = "ck-locus-report";
  j["version"] = 1;
  j["p"] = p;
  j["depth"] = depth;
  j["precision"] = precision;
  j["terms"] = terms;
  j["max_radius"] = max_radius;
  j["generators"] = generators;
  j["disks"] = J::array();
  for (const auto& d : disks) {
    J dj;
    dj["residue"] = d.residue;
    dj["center"] = padic_to_json(d.center);
    dj["verdict"] = d.verdict == DiskVerdict::Certified ? "certified" : "indeterminate";
    dj["bound"] = d.bound;
    dj["known_points"] = J::array();
    for (const auto& z : d.known_points) dj["known_points"].push_back(z.to_string());
    dj["balls"] = J::array();
    for (const auto& b : d.balls) {
      J bj;
      bj["center"] = b.center.to_rational().get_str();
      bj["radius"] = b.radius;
      bj["verdict"] = b.verdict == DiskVerdict::Certified ? "certified" : "indeterminate";
      bj["bound"] = b.bound;
      bj["expected"] = b.expected;
      dj["balls"].push_back(std::move(bj));
    }
    j["disks"].push_back(std::move(dj));
  }
  j["known_points"] = J::array();
  for (const auto& k : known) {
    J kj;
    kj["point"] = k.point.to_string();
    kj["min_valuation"] = k.min_valuation;
    kj["vanishes"] = k.vanishes;
    j["known_points"].push_back(std::move(kj));
  }
  j["certified"] = certified;
  return j;
}

}  // namespace ck
