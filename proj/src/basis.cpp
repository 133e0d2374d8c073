#include "ck/basis.hpp"

#include <algorithm>
#include <functional>

#include "ck/error.hpp"
#include "ck/geometric.hpp"
#include "ck/goncharov.hpp"
#include "ck/polylog.hpp"

namespace ck {

// ------------------------------------------------------------------ elements

MotivicBasisElement MotivicBasisElement::log(long q) {
  MotivicBasisElement e;
  e.kind = Kind::Log;
  e.prime = q;
  e.depth = 1;
  return e;
}

MotivicBasisElement MotivicBasisElement::zeta(int i) {
  if (i < 3 || i % 2 == 0) throw Error(ErrorCode::InvalidArgument, "zeta(i) needs odd i >= 3");
  MotivicBasisElement e;
  e.kind = Kind::Zeta;
  e.depth = i;
  e.point = SUnitPoint::tangential();
  return e;
}

MotivicBasisElement MotivicBasisElement::polylog(int i, const SUnitPoint& a) {
  if (i < 2) throw Error(ErrorCode::InvalidArgument, "polylog generators have depth >= 2");
  if (a.is_tangential()) return zeta(i);
  MotivicBasisElement e;
  e.kind = Kind::PolyLog;
  e.depth = i;
  e.point = a;
  return e;
}

std::string MotivicBasisElement::to_string() const {
  switch (kind) {
    case Kind::Log: return "log(" + std::to_string(prime) + ")";
    case Kind::Zeta: return "zeta(" + std::to_string(depth) + ")";
    case Kind::PolyLog: return "Li" + std::to_string(depth) + "(" + point.value.get_str() + ")";
  }
  return "?";
}

bool MotivicBasisElement::operator==(const MotivicBasisElement& o) const {
  return kind == o.kind && prime == o.prime && depth == o.depth && point == o.point;
}

std::vector<int> PolylogBasis::generators_of_weight(int m) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].weight() == m) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<GeneratorMonomial> PolylogBasis::monomials(int m) const {
  std::vector<GeneratorMonomial> out;
  for (int g : generators_of_weight(m)) out.push_back({g});
  std::vector<GeneratorMonomial> products;
  GeneratorMonomial cur;
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    if (remaining == 0) {
      if (cur.size() >= 2) products.push_back(cur);
      return;
    }
    for (int g = start; g < static_cast<int>(generators.size()); ++g) {
      const int w = generators[g].weight();
      if (w > remaining || w == m) continue;
      cur.push_back(g);
      rec(g, remaining - w);
      cur.pop_back();
    }
  };
  rec(0, m);
  out.insert(out.end(), products.begin(), products.end());
  return out;
}

std::string PolylogBasis::monomial_name(const GeneratorMonomial& mono) const {
  if (mono.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (i) s += "*";
    s += generators.at(mono[i]).to_string();
  }
  return s;
}

const ExpansionRecord* ExpansionTable::find(const Rational& a, int m) const {
  auto it = records.find({a, m});
  return it == records.end() ? nullptr : &it->second;
}

// ------------------------------------------------------------------ helpers

namespace {

Approx exact(long p, const Rational& v) { return Approx(p, v); }

long working_precision(const PolylogBasis& basis) { return basis.precision + 2 * basis.depth + 6; }

std::vector<int> tau_letters(const Alphabet& A) {
  std::vector<int> out;
  for (std::size_t i = 0; i < A.size(); ++i)
    if (A[i].kind == LetterKind::Tau) out.push_back(static_cast<int>(i));
  return out;
}

std::optional<int> sigma_letter(const Alphabet& A, int weight) {
  for (std::size_t i = 0; i < A.size(); ++i)
    if (A[i].kind == LetterKind::Sigma && A[i].weight == weight) return static_cast<int>(i);
  return std::nullopt;
}

void add_term(ApproxShuffle& x, const Word& w, const Approx& c) {
  auto it = x.find(w);
  if (it == x.end()) x.emplace(w, c);
  else it->second += c;
}

using TensorCoords = std::map<std::pair<Word, Word>, Approx>;

TensorCoords reduced_coproduct(const Alphabet& A, const ApproxShuffle& x) {
  TensorCoords out;
  for (const auto& [w, c] : x)
    for (std::size_t k = 1; k < w.length(); ++k) {
      auto key = std::make_pair(w.slice(A, 0, k), w.slice(A, k, w.length()));
      auto it = out.find(key);
      if (it == out.end()) out.emplace(key, c);
      else it->second += c;
    }
  return out;
}

// Dense rows over the union of keys.
template <class Key>
std::vector<std::vector<Approx>> densify(long p, const std::vector<std::map<Key, Approx>>& maps) {
  std::map<Key, std::size_t> index;
  for (const auto& m : maps)
    for (const auto& kv : m) index.emplace(kv.first, 0);
  std::size_t i = 0;
  for (auto& kv : index) kv.second = i++;
  std::vector<std::vector<Approx>> rows;
  for (const auto& m : maps) {
    std::vector<Approx> r(index.size(), exact(p, 0));
    for (const auto& [k, c] : m) r[index.at(k)] = c;
    rows.push_back(std::move(r));
  }
  return rows;
}

// Li_m(a) word expansion without the sigma_m slot term.
ApproxShuffle expansion_below_top(const Rational& a, int m, const PolylogBasis& basis, ExpansionTable& table) {
  const Alphabet& A = *basis.alphabet;
  const long p = basis.p;
  const auto taus = tau_letters(A);
  std::vector<std::pair<int, Rational>> v0;  // nonzero v_q(a)
  std::vector<std::pair<int, Rational>> v1;  // nonzero -v_q(1 - a)
  std::vector<long> primes;
  for (int t : taus) primes.push_back(A[t].label);
  const auto va = valuation_vector(a, primes);
  const auto vb = valuation_vector(1 - a, primes);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (va[i] != 0) v0.push_back({taus[i], Rational(va[i])});
    if (vb[i] != 0) v1.push_back({taus[i], Rational(-vb[i])});
  }
  ApproxShuffle out;
  for (int s = 1; s <= m; ++s) {
    std::vector<std::pair<int, Approx>> slots;
    if (s == 1) {
      for (const auto& [t, v] : v1) slots.push_back({t, exact(p, v)});
    } else if (s % 2 == 1 && s < m) {
      if (auto sig = sigma_letter(A, s)) slots.push_back({*sig, expand_polylog(a, s, basis, table).sigma_pairing});
    }
    if (slots.empty()) continue;
    const int r = m - s;
    // all r-tuples of taus with nonzero v_q(a)
    std::vector<std::pair<std::vector<int>, Rational>> tuples{{{}, Rational(1)}};
    for (int k = 0; k < r; ++k) {
      std::vector<std::pair<std::vector<int>, Rational>> next;
      for (const auto& [tup, c] : tuples)
        for (const auto& [t, v] : v0) {
          auto t2 = tup;
          t2.push_back(t);
          next.push_back({std::move(t2), c * v});
        }
      tuples = std::move(next);
    }
    for (const auto& [tup, c] : tuples)
      for (const auto& [rho, val] : slots) {
        auto letters = tup;
        letters.push_back(rho);
        add_term(out, Word(A, letters), exact(p, c) * val);
      }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_exact() && kv.second.value() == 0; });
  return out;
}

ApproxShuffle generator_expansion(int g, const PolylogBasis& basis, ExpansionTable& table) {
  const Alphabet& A = *basis.alphabet;
  const auto& e = basis.generators.at(g);
  const long p = basis.p;
  switch (e.kind) {
    case MotivicBasisElement::Kind::Log:
      return {{Word::single(A, *A.index_of(tau(e.prime))), exact(p, 1)}};
    case MotivicBasisElement::Kind::Zeta:
      return {{Word::single(A, *sigma_letter(A, e.depth)), exact(p, 1)}};
    case MotivicBasisElement::Kind::PolyLog:
      return polylog_word_expansion(e.point.value, e.depth, basis, table);
  }
  return {};
}

void require_ready(const PolylogBasis& basis, int m) {
  if (m < 1 || m > basis.depth) throw Error(ErrorCode::InvalidArgument, "weight outside the basis depth");
  if (static_cast<int>(basis.target_dims.size()) <= m ||
      static_cast<int>(basis.generators_of_weight(m).size()) != basis.target_dims[m])
    throw Error(ErrorCode::InvalidArgument, "basis incomplete in weight " + std::to_string(m));
}

}  // namespace

ApproxShuffle approx_shuffle_product(const Alphabet& A, const ApproxShuffle& x, const ApproxShuffle& y) {
  ApproxShuffle out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) {
      const Approx c = cu * cv;
      for (const auto& [w, mult] : shuffle_words(A, u, v)) add_term(out, w, c * Approx(c.prime(), Rational(mult)));
    }
  return out;
}

std::vector<Rational> expand_li1(const Rational& a, long q_M) {
  if (a == 0 || a == 1) throw Error(ErrorCode::InvalidArgument, "Li1 point must differ from 0 and 1");
  const auto primes = primes_up_to(q_M);
  valuation_vector(a, primes);  // support check
  std::vector<Rational> out;
  for (long v : valuation_vector(1 - a, primes)) out.push_back(Rational(-v));
  return out;
}

ApproxShuffle polylog_word_expansion(const Rational& a, int m, const PolylogBasis& basis, ExpansionTable& table) {
  ApproxShuffle x = expansion_below_top(a, m, basis, table);
  if (m >= 3 && m % 2 == 1)
    if (auto sig = sigma_letter(*basis.alphabet, m)) {
      const Approx c = expand_polylog(a, m, basis, table).sigma_pairing;
      if (!(c.is_exact() && c.value() == 0)) add_term(x, Word::single(*basis.alphabet, *sig), c);
    }
  return x;
}

ApproxShuffle monomial_word_expansion(const GeneratorMonomial& mono, const PolylogBasis& basis, ExpansionTable& table) {
  ApproxShuffle x{{Word(), exact(basis.p, 1)}};
  for (int g : mono) x = approx_shuffle_product(*basis.alphabet, x, generator_expansion(g, basis, table));
  return x;
}

PadicNumber monomial_period(const GeneratorMonomial& mono, const PolylogBasis& basis, const ExpansionTable& table) {
  const long W = working_precision(basis);
  PadicNumber x = PadicNumber::from_integer(basis.p, 1, W);
  for (int g : mono) x = x * table.generator_periods.at(g);
  return x;
}

const ExpansionRecord& expand_polylog(const Rational& a, int m, const PolylogBasis& basis, ExpansionTable& table) {
  if (const auto* r = table.find(a, m)) return *r;
  require_ready(basis, m);
  const long p = basis.p;
  const long W = working_precision(basis);
  const auto monos = basis.monomials(m);
  ExpansionRecord rec;
  rec.sigma_pairing = exact(p, 0);
  rec.period = padic_polylog(m, p, a, W);
  if (m == 1) {
    for (const auto& c : expand_li1(a, basis.q_M)) rec.coefficients.push_back(exact(p, c));
    return table.records.emplace(std::make_pair(a, m), std::move(rec)).first->second;
  }
  const bool odd = m % 2 == 1 && sigma_letter(*basis.alphabet, m).has_value();
  const std::size_t j0 = odd ? 1 : 0;  // zeta(m) is primitive: invisible to the reduced coproduct
  std::vector<TensorCoords> maps;
  for (std::size_t j = j0; j < monos.size(); ++j)
    maps.push_back(reduced_coproduct(*basis.alphabet, monomial_word_expansion(monos[j], basis, table)));
  maps.push_back(reduced_coproduct(*basis.alphabet, expansion_below_top(a, m, basis, table)));
  auto rows = densify(p, maps);
  const auto target = rows.back();
  rows.pop_back();
  // Solve sum_j c_j rows_j = target with p-adic pivoting.
  const std::size_t D = target.size();
  ApproxMatrix T(D, rows.size(), exact(p, 0));
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t i = 0; i < D; ++i) T(i, j) = rows[j][i];
  auto sol = solve(T, target, exact(p, 0));
  if (!sol) throw Error(ErrorCode::Inconsistent, "Li" + std::to_string(m) + "(" + a.get_str() + ") outside the span of the basis");
  rec.coefficients.assign(monos.size(), exact(p, 0));
  for (std::size_t j = j0; j < monos.size(); ++j) rec.coefficients[j] = (*sol)[j - j0];
  if (odd) {
    Approx rest = rec.period.to_approx();
    for (std::size_t j = j0; j < monos.size(); ++j)
      rest -= rec.coefficients[j] * monomial_period(monos[j], basis, table).to_approx();
    const PadicNumber& z = table.generator_periods.at(monos[0][0]);
    if (z.is_zero() || z.valuation() >= basis.precision)
      throw Error(ErrorCode::InsufficientPrecision, "|zeta_p(" + std::to_string(m) + ")| <= eps");
    rec.sigma_pairing = rest / z.to_approx();
    rec.coefficients[0] = rec.sigma_pairing;
  }
  return table.records.emplace(std::make_pair(a, m), std::move(rec)).first->second;
}

// ------------------------------------------------------------------ devissage

namespace {

Approx leaf_pairing(int g, const Word& w, const PolylogBasis& basis, ExpansionTable& table) {
  const Alphabet& A = *basis.alphabet;
  const long p = basis.p;
  const auto& e = basis.generators.at(g);
  if (w.weight() != e.weight() || w.empty()) return exact(p, 0);
  switch (e.kind) {
    case MotivicBasisElement::Kind::Log:
      return exact(p, w.length() == 1 && A[w[0]] == tau(e.prime) ? 1 : 0);
    case MotivicBasisElement::Kind::Zeta:
      return exact(p, w.length() == 1 && A[w[0]] == sigma(e.depth) ? 1 : 0);
    case MotivicBasisElement::Kind::PolyLog: {
      const Rational& a = e.point.value;
      Rational prefix = 1;
      for (std::size_t i = 0; i + 1 < w.length(); ++i) {
        const Letter& l = A[w[i]];
        if (l.kind != LetterKind::Tau) return exact(p, 0);
        prefix *= valuation(a, l.label);
      }
      const Letter& slot = A[w[w.length() - 1]];
      if (slot.kind == LetterKind::Tau) return exact(p, prefix * -valuation(Rational(1 - a), slot.label));
      if (slot.weight % 2 == 0) return exact(p, 0);
      return exact(p, prefix) * expand_polylog(a, slot.weight, basis, table).sigma_pairing;
    }
  }
  return exact(p, 0);
}

}  // namespace

Approx pair_with_word(const GeneratorMonomial& mono, const Word& w, const PolylogBasis& basis, ExpansionTable& table) {
  const long p = basis.p;
  int weight = 0;
  for (int g : mono) weight += basis.generators.at(g).weight();
  if (weight != w.weight()) throw Error(ErrorCode::DimensionMismatch, "pair_with_word: weight mismatch");
  if (mono.empty()) return exact(p, 1);
  if (mono.size() == 1) return leaf_pairing(mono[0], w, basis, table);
  const int first = mono[0];
  const GeneratorMonomial rest(mono.begin() + 1, mono.end());
  const int w1 = basis.generators.at(first).weight();
  Approx sum = exact(p, 0);
  for (const auto& [uv, mult] : unshuffle(*basis.alphabet, w)) {
    if (uv.first.weight() != w1) continue;
    Approx a = leaf_pairing(first, uv.first, basis, table);
    if (a.is_exact() && a.value() == 0) continue;
    sum += exact(p, Rational(mult)) * a * pair_with_word(rest, uv.second, basis, table);
  }
  return sum;
}

// ------------------------------------------------------------------ basis search

long default_auxiliary_prime(long q_s) {
  long p = 5;
  while (!is_prime(p) || p <= q_s) ++p;
  return p;
}

BasisResult build_basis_at(long q_M, long p, int n, long height, long precision) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "depth must be >= 1");
  if (!is_prime(q_M) || !is_prime(p) || p <= q_M)
    throw Error(ErrorCode::InvalidArgument, "need primes q_M < p");
  BasisResult res;
  PolylogBasis& B = res.basis;
  ExpansionTable& T = res.table;
  B.q_M = q_M;
  B.p = p;
  B.depth = n;
  B.precision = precision;
  B.height = height;
  B.alphabet = geometric_alphabet(primes_up_to(q_M), n);
  T.p = p;
  T.precision = precision;
  const long W = working_precision(B);
  GoncharovAlgebra G(B.alphabet);
  B.target_dims.assign(static_cast<std::size_t>(n + 1), 0);
  for (int m = 1; m <= n; ++m) B.target_dims[m] = G.generator_count(m);

  for (long q : primes_up_to(q_M)) {
    B.generators.push_back(MotivicBasisElement::log(q));
    T.generator_periods.push_back(padic_log(p, Rational(q), W));
  }
  const auto candidates = enumerate_points(OpenIntegerScheme::tapered(q_M), height);
  const EpsilonContext ctx{p, precision};
  for (int m = 2; m <= n; ++m) {
    const bool odd = m % 2 == 1;
    if (odd) {
      PadicNumber z = padic_zeta(m, p, W);
      if (z.is_zero() || z.valuation() >= precision)
        throw Error(ErrorCode::InsufficientPrecision, "|zeta_p(" + std::to_string(m) + ")| <= eps");
      B.generators.push_back(MotivicBasisElement::zeta(m));
      T.generator_periods.push_back(z);
    }
    const int needed = B.target_dims[m] - (odd ? 1 : 0);
    std::vector<TensorCoords> maps;
    for (const auto& mono : B.monomials(m)) {
      if (mono.size() == 1) continue;  // zeta(m): primitive
      maps.push_back(reduced_coproduct(*B.alphabet, monomial_word_expansion(mono, B, T)));
    }
    int accepted = 0;
    for (const auto& a : candidates) {
      if (accepted == needed) break;
      TensorCoords row;
      try {
        row = reduced_coproduct(*B.alphabet, expansion_below_top(a.value, m, B, T));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::InsufficientPrecision) continue;
        throw;
      }
      if (row.empty()) continue;
      maps.push_back(row);
      if (!eps_linearly_independent(densify(p, maps), ctx)) {
        maps.pop_back();
        continue;
      }
      B.generators.push_back(MotivicBasisElement::polylog(m, a));
      T.generator_periods.push_back(padic_polylog(m, p, a.value, W));
      ++accepted;
    }
    if (accepted < needed) return res;  // incomplete: caller advances the schedule
    // Generators of weight m are their own expansions; sigma_m pairs to zero by duality.
    const auto monos = B.monomials(m);
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const auto& e = B.generators[monos[j][0]];
      if (monos[j].size() != 1 || e.kind != MotivicBasisElement::Kind::PolyLog) continue;
      ExpansionRecord rec;
      rec.coefficients.assign(monos.size(), exact(p, 0));
      rec.coefficients[j] = exact(p, 1);
      rec.sigma_pairing = exact(p, 0);
      rec.period = T.generator_periods[monos[j][0]];
      T.records[{e.point.value, m}] = std::move(rec);
    }
  }
  B.complete = true;
  return res;
}

BasisResult build_basis(long q_s, int n, const BasisSchedule& J, std::optional<long> prime) {
  long p = prime ? *prime : default_auxiliary_prime(q_s);
  if (!is_prime(p) || p <= q_s) throw Error(ErrorCode::InvalidArgument, "auxiliary prime must exceed q_s");
  long q_M = prev_prime(p);
  const int fibers = prime ? 1 : J.fibers;
  std::string last;
  for (int f = 0; f < fibers; ++f) {
    for (int step = 0; step < J.steps; ++step) {
      const long b = J.initial_height << step;
      const long N = J.initial_precision + step * J.precision_step;
      try {
        BasisResult r = build_basis_at(q_M, p, n, b, N);
        if (r.basis.complete) return r;
        last = "incomplete at height " + std::to_string(b);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InsufficientPrecision) throw;
        last = e.what();
      }
    }
    q_M = p;
    p = next_prime(p);
  }
  throw Error(ErrorCode::BudgetExhausted, "basis search did not halt (" + last + ")");
}

// ------------------------------------------------------------------ change of basis

ShuffleMatrix shuffle_expansion_matrix(const PolylogBasis& basis, ExpansionTable& table, int n) {
  if (!basis.complete) throw Error(ErrorCode::InvalidArgument, "shuffle_expansion_matrix needs a complete basis");
  if (n > basis.depth) throw Error(ErrorCode::InvalidArgument, "depth beyond the basis");
  ShuffleMatrix M;
  for (int m = 1; m <= n; ++m)
    for (auto& mono : basis.monomials(m)) M.rows.push_back({m, std::move(mono)});
  for (const auto& w : words_up_to_weight(*basis.alphabet, n))
    if (!w.empty()) M.columns.push_back(w);
  M.entries = ApproxMatrix(M.rows.size(), M.columns.size(), exact(basis.p, 0));
  for (std::size_t i = 0; i < M.rows.size(); ++i)
    for (std::size_t j = 0; j < M.columns.size(); ++j)
      if (M.columns[j].weight() == M.rows[i].first)
        M.entries(i, j) = pair_with_word(M.rows[i].second, M.columns[j], basis, table);
  return M;
}

std::vector<std::vector<Approx>> descend_basis(const ShuffleMatrix& M, const PolylogBasis& basis,
                                               const OpenIntegerScheme& Z, int n) {
  const Alphabet& A = *basis.alphabet;
  for (long q : Z.excluded_primes())
    if (q > basis.q_M) throw Error(ErrorCode::InvalidArgument, "scheme excludes a prime above q_M");
  const long p = basis.p;
  auto forbidden = [&](const Word& w) {
    for (int l : w.letters())
      if (A[l].kind == LetterKind::Tau && !Z.excludes(A[l].label)) return true;
    return false;
  };
  std::vector<std::vector<Approx>> out;
  for (int m = 1; m <= n; ++m) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < M.rows.size(); ++i)
      if (M.rows[i].first == m) rows.push_back(i);
    for (std::size_t j = 0; j < M.columns.size(); ++j)
      if (M.columns[j].weight() == m && forbidden(M.columns[j])) cols.push_back(j);
    if (rows.empty()) continue;
    // left kernel: lambda with sum_i lambda_i M(i, c) = 0 on forbidden columns
    std::vector<std::vector<Approx>> kernel;
    if (cols.empty()) {
      for (std::size_t k = 0; k < rows.size(); ++k) {
        std::vector<Approx> e(rows.size(), exact(p, 0));
        e[k] = exact(p, 1);
        kernel.push_back(std::move(e));
      }
    } else {
      ApproxMatrix F(cols.size(), rows.size(), exact(p, 0));
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows.size(); ++r) F(c, r) = M.entries(rows[r], cols[c]);
      kernel = kernel_basis(F, exact(p, 0));
    }
    for (const auto& k : kernel) {
      std::vector<Approx> full(M.rows.size(), exact(p, 0));
      for (std::size_t r = 0; r < rows.size(); ++r) full[rows[r]] = k[r];
      out.push_back(std::move(full));
    }
  }
  return out;
}

Approx motivic_period(const ShuffleElement& x, const PolylogBasis& basis, ExpansionTable& table) {
  const long p = basis.p;
  const Alphabet& B = *basis.alphabet;
  Approx total = exact(p, 0);
  for (int m = 0; m <= std::max(0, x.max_weight()); ++m) {
    const ShuffleElement part = x.homogeneous_part(m);
    if (part.is_zero()) continue;
    if (m == 0) {
      total += exact(p, part.coefficient(Word()));
      continue;
    }
    require_ready(basis, m);
    // translate words into the basis alphabet
    std::map<Word, Rational> target;
    for (const auto& [w, c] : part.terms()) {
      std::vector<int> letters;
      for (int l : w.letters()) {
        auto idx = B.index_of(x.alphabet()[l]);
        if (!idx) throw Error(ErrorCode::AlphabetMismatch, "letter " + x.alphabet()[l].name() + " not in the basis alphabet");
        letters.push_back(*idx);
      }
      target[Word(B, letters)] += c;
    }
    const auto monos = basis.monomials(m);
    const auto words = words_of_weight(B, m);
    ApproxMatrix Mt(words.size(), monos.size(), exact(p, 0));
    std::vector<Approx> rhs(words.size(), exact(p, 0));
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (auto it = target.find(words[i]); it != target.end()) rhs[i] = exact(p, it->second);
      for (std::size_t j = 0; j < monos.size(); ++j) Mt(i, j) = pair_with_word(monos[j], words[i], basis, table);
    }
    auto lambda = solve(Mt, rhs, exact(p, 0));
    if (!lambda) throw Error(ErrorCode::Inconsistent, "element outside the span of the polylogarithmic basis");
    for (std::size_t j = 0; j < monos.size(); ++j)
      total += (*lambda)[j] * monomial_period(monos[j], basis, table).to_approx();
  }
  return total;
}

}  // namespace ck
