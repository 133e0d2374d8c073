// Acceptance run: one PASS/FAIL line per criterion, exit status = failures.
// Usage: ck_acceptance <path to the ck binary>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ck/error.hpp"
#include "ck/geometric.hpp"
#include "ck/goncharov.hpp"
#include "ck/linalg.hpp"
#include "ck/loci.hpp"
#include "ck/polylog.hpp"
#include "ck/shuffle.hpp"
#include "frozen.hpp"
#include "oracles.hpp"

using namespace ck;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit;  // seconds, 0 = none
  std::function<Outcome()> run;
};

Rational random_rational(std::mt19937& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- 1. Hopf suite

Outcome hopf_suite() {
  long checks = 0;
  auto fail = [&](const std::string& what) { return Outcome{false, what}; };
  for (auto alphabet : {Alphabet::taus_and_sigmas({2, 3}, {}), Alphabet::taus_and_sigmas({2}, {3})}) {
    auto A = make_alphabet(alphabet);
    auto unit = ShuffleElement::unit(A);
    std::vector<Word> words{Word()};
    for (const auto& w : words_up_to_weight(*A, 5)) words.push_back(w);
    auto el = [&](const Word& w) { return ShuffleElement::word(A, w); };

    for (const auto& u : words) {
      auto x = el(u);
      if (!(shuffle_product(x, unit) == x && shuffle_product(unit, x) == x)) return fail("unit");
      auto D = deconcat_coproduct(x);
      if (!(coproduct_left(D) == coproduct_right(D))) return fail("coassociativity");
      ShuffleElement left(A), right(A);
      for (const auto& [k, c] : D.terms()) {
        if (k.first.empty()) left.add(k.second, c);
        if (k.second.empty()) right.add(k.first, c);
      }
      if (!(left == x && right == x)) return fail("counit");
      checks += 4;
      for (const auto& v : words) {
        if (u.weight() + v.weight() > 5) continue;
        auto y = el(v);
        auto xy = shuffle_product(x, y);
        if (!(xy == shuffle_product(y, x))) return fail("commutativity");
        if (!(deconcat_coproduct(xy) == tensor_product(deconcat_coproduct(x), deconcat_coproduct(y))))
          return fail("compatibility of product and coproduct");
        auto xy_tensor = tensor(x, y);
        for (const auto& w : words)
          if (w.weight() == u.weight() + v.weight()) {
            if (pairing(xy, w) != pairing(xy_tensor, unshuffle(*A, w))) return fail("pairing duality");
            ++checks;
          }
        for (const auto& t : words) {
          if (u.weight() + v.weight() + t.weight() > 5) continue;
          auto z = el(t);
          if (!(shuffle_product(xy, z) == shuffle_product(x, shuffle_product(y, z)))) return fail("associativity");
          ++checks;
        }
        checks += 2;
      }
    }
    for (int m = 1; m <= 5; ++m) {
      auto basis = monomial_basis(A, m);
      auto ws = words_of_weight(*A, m);
      std::vector<std::vector<Rational>> rows;
      for (const auto& b : basis) {
        std::vector<Rational> r;
        for (const auto& w : ws) r.push_back(b.coefficient(w));
        rows.push_back(std::move(r));
      }
      if (basis.size() != ws.size() || rank(RationalMatrix::from_rows(rows)) != ws.size())
        return fail("Radford rank at weight " + std::to_string(m));
      ++checks;
    }
  }
  return {true, std::to_string(checks) + " exact checks"};
}

// ---------------------------------------------------------------- 2. coproduct of Li_n

Outcome polylog_coproduct() {
  for (int n = 1; n <= 8; ++n)
    if (!(reduced_coproduct_polylog(n) == polylog_coproduct_formula(n)))
      return {false, "mismatch at n = " + std::to_string(n)};
  return {true, "n = 1..8"};
}

// ---------------------------------------------------------------- 3. pairing splitting

// <target_k(c), w> read off c(w) in Q<<e0, e1>>.
std::string polylog_string(int k) { return k == 0 ? "0" : std::string(static_cast<std::size_t>(k - 1), '0') + "1"; }

Outcome pairing_splitting() {
  std::mt19937 rng(20261016);
  long cases = 0;
  const int depth = 5;
  for (auto primes : std::vector<std::vector<long>>{{2}, {2, 3}}) {
    auto A = make_alphabet(Alphabet::taus_and_sigmas(primes, {3}));
    const auto subst = ev_sharp(A, depth);
    auto words = words_up_to_weight(*A, depth);
    for (int trial = 0; trial < 8; ++trial) {
      std::map<std::string, Rational> value;
      for (const auto& s : subst.cocycle_names) value[s] = random_rational(rng, 9, 5);

      auto image_of = [&](const Letter& l) {
        if (l.kind == LetterKind::Tau)
          return oracle::FreePoly{{"0", value.at(cocycle_name(l, "0"))}, {"1", value.at(cocycle_name(l, "1"))}};
        oracle::FreePoly x;
        return oracle::add(x, oracle::ad_e0_power(l.weight - 1), value.at(cocycle_name(l, polylog_string(l.weight))));
      };
      auto oracle_value = [&](int k, const Word& w) {
        oracle::FreePoly c{{"", 1}};
        for (int l : w.letters()) c = oracle::multiply(c, image_of((*A)[l]));
        auto it = c.find(polylog_string(k));
        return it == c.end() ? Rational(0) : it->second;
      };
      auto library_value = [&](int k, const Word& w) {
        Rational s = 0;
        for (const auto& [tw, syms] : subst.images[static_cast<std::size_t>(k)].terms) {
          if (!(tw == w)) continue;
          Rational t = 1;
          for (const auto& sym : syms) t *= value.at(sym);
          s += t;
        }
        return s;
      };

      // single coordinates, including the vanishing ones of mismatched weight
      for (int k = 0; k <= depth; ++k)
        for (const auto& w : words) {
          if (oracle_value(k, w) != library_value(k, w))
            return {false, "<" + target_name(k) + ", " + format_word(*A, w) + "> differs"};
          ++cases;
        }

      // products: oracle shuffles the expanded elements, the library splits by unshuffle
      auto element = [&](int k) {
        ShuffleElement x(A);
        for (const auto& w : words)
          if (auto v = oracle_value(k, w); v != 0) x.add(w, v);
        return x;
      };
      for (int a = 0; a <= depth; ++a)
        for (int b = a; b <= depth; ++b) {
          const int weight = std::max(a, 1) + std::max(b, 1);
          if (weight > depth) continue;
          auto product = shuffle_product(element(a), element(b));
          for (const auto& w : words_of_weight(*A, weight)) {
            Rational split = 0;
            for (const auto& [uv, mult] : unshuffle(*A, w))
              split += Rational(mult) * library_value(a, uv.first) * library_value(b, uv.second);
            if (product.coefficient(w) != split)
              return {false, target_name(a) + "*" + target_name(b) + " at " + format_word(*A, w)};
            ++cases;
          }
        }
    }
  }
  if (cases < 1000) return {false, "only " + std::to_string(cases) + " cases"};
  return {true, std::to_string(cases) + " exact cases"};
}

// ---------------------------------------------------------------- 4. perturbation certificate

Outcome perturbation_robustness() {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> small(-30, 30), dim(1, 3), extra(0, 2), shift(0, 3), prime_pick(0, 2);
  const long primes[] = {3, 5, 7};
  long trials = 0, attempts = 0;
  while (trials < 1000 && attempts < 20000) {
    ++attempts;
    const long p = primes[prime_pick(rng)];
    const std::size_t d = static_cast<std::size_t>(dim(rng)), k = d + static_cast<std::size_t>(extra(rng));
    std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(k));
    for (auto& r : rows)
      for (auto& x : r) x = random_rational(rng, 30, 6) * power_of(p, shift(rng) - 1);
    if (d >= 2 && attempts % 3 == 0)  // nearly dependent families
      for (std::size_t j = 0; j < k; ++j)
        rows[1][j] = rows[0][j] * Rational(small(rng) | 1) + power_of(p, 2 + shift(rng)) * Rational(small(rng));
    const EpsilonContext ctx{p, 2 + shift(rng)};
    if (!eps_linearly_independent(rows, ctx)) continue;
    const Rational threshold = perturbation_threshold(rows, ctx);
    if (threshold <= 0) return {false, "non-positive threshold"};
    long e = 0;  // smallest e with p^-e <= threshold
    while (power_of(p, -e) > threshold) ++e;
    auto perturbed = rows;
    for (auto& r : perturbed)
      for (auto& x : r) {
        Rational delta = Rational(small(rng)) * power_of(p, e);
        std::uniform_int_distribution<int> unit(1, 40);
        int u = unit(rng);
        while (u % p == 0) ++u;
        delta /= u;
        if (padic_abs(delta, p) > threshold) return {false, "perturbation generator out of range"};
        x += delta;
      }
    const auto witness = largest_minor(rows, p);
    if (!witness) return {false, "independent family without a witness minor"};
    RationalMatrix before(d, d), after(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        before(i, j) = rows[i][witness->columns[j]];
        after(i, j) = perturbed[i][witness->columns[j]];
      }
    const Rational det = determinant(after);
    if (det == 0 || rank(RationalMatrix::from_rows(perturbed)) != d)
      return {false, "rank dropped after a certified perturbation"};
    if (padic_abs(det, p) != padic_abs(determinant(before), p))
      return {false, "witness minor changed size under perturbation"};
    ++trials;
  }
  if (trials < 1000) return {false, "only " + std::to_string(trials) + " independent trials"};
  return {true, std::to_string(trials) + " trials"};
}

// ---------------------------------------------------------------- 5. functional equations

Outcome functional_equations() {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-200, 200), den(1, 200), lift(1, 2);
  const long N = 20;
  long checks = 0;
  for (long p : {5L, 7L}) {
    for (int i = 0; i < 40; ++i) {
      long a = num(rng), b = den(rng);
      if (a == 0) a = 1;
      while (b % p == 0) ++b;
      Rational z = Rational(a, b) * power_of(p, lift(rng));
      z.canonicalize();
      for (int n = 1; n <= 4; ++n) {
        auto lhs = padic_polylog(n, p, z * z, N);
        auto rhs = (padic_polylog(n, p, z, N) + padic_polylog(n, p, -z, N)).mul_rational(Rational(1 << (n - 1)));
        if (!lhs.agrees_with(rhs, N))
          return {false, "distribution relation, p = " + std::to_string(p) + ", n = " + std::to_string(n) +
                             ", z = " + z.get_str()};
        ++checks;
      }
    }
    for (int i = 0; i < 200; ++i) {
      Rational x = random_rational(rng, 1000, 1000), y = random_rational(rng, 1000, 1000);
      if (x == 0 || y == 0) continue;
      if (!padic_log(p, x * y, N).agrees_with(padic_log(p, x, N) + padic_log(p, y, N), N))
        return {false, "log homomorphism at " + x.get_str() + ", " + y.get_str()};
      ++checks;
    }
  }
  return {true, std::to_string(checks) + " identities to p^-20"};
}

// ---------------------------------------------------------------- 6. zeta values

Outcome zeta_values() {
  std::ostringstream out;
  for (long p : {5L, 7L}) {
    const auto a = padic_zeta(3, p, 20);
    const auto b = padic_zeta_distribution(3, p, 20);
    if (a.is_zero() || a.valuation() >= 20) return {false, "zeta_p(3) vanishes to precision for p = " + std::to_string(p)};
    if (!a.agrees_with(b, 15)) return {false, "routes disagree for p = " + std::to_string(p)};
    out << "v_" << p << "(zeta(3)) = " << a.valuation() << " ";
  }
  return {true, out.str() + "(routes agree to p^-15)"};
}

// ---------------------------------------------------------------- 7. geometric oracle

Outcome geometric_oracle() {
  const auto t2 = eliminate(ev_sharp(geometric_alphabet({2}, 2), 2)).generator_strings();
  if (t2 != frozen::kIdealT2Depth2) return {false, "ideal for {t2} is not (Li2 - 1/2*log*Li1)"};
  const auto none = eliminate(ev_sharp(geometric_alphabet({}, 2), 2)).generator_strings();
  if (none != frozen::kIdealEmptyDepth2) return {false, "ideal for the empty alphabet is not (log, Li1, Li2)"};
  long compared = 0;
  for (auto primes : std::vector<std::vector<long>>{{2}, {2, 3}})
    for (auto sigmas : std::vector<std::vector<int>>{{}, {3}, {3, 5}}) {
      auto A = make_alphabet(Alphabet::taus_and_sigmas(primes, sigmas));
      GoncharovAlgebra G(A);
      for (int m = 1; m <= 6; ++m) {
        if (G.generator_count(m) != hall_oracle_dimension(*A, m))
          return {false, "dimension mismatch at weight " + std::to_string(m)};
        ++compared;
      }
    }
  return {true, "ideals match, " + std::to_string(compared) + " dimensions match"};
}

// ---------------------------------------------------------------- 8. the point -1 over Z[1/3]

Outcome minus_one_phenomenon() {
  LociOptions o;
  o.prime = 5;
  const long N = 15;
  const auto loci = assemble_loci(OpenIntegerScheme::parse("Z[1/3]"), 2, N, o);
  if (loci.symmetrized.empty()) return {false, "no generators"};
  long worst = kInfinity;
  for (const auto& f : loci.symmetrized) worst = std::min(worst, f.evaluate(-1).valuation());
  const bool ok = worst >= N - 2;
  return {ok, std::to_string(loci.symmetrized.size()) + " generators, min v(F(-1)) = " + std::to_string(worst) +
                  " (need >= " + std::to_string(N - 2) + ")"};
}

// ---------------------------------------------------------------- 9. locus containment

Outcome locus_containment() {
  LociOptions o;
  o.prime = 7;
  const long N = 15;
  const auto Z = OpenIntegerScheme::parse("Z[1/2]");
  const auto loci = assemble_loci(Z, 2, N, o);
  const auto known = enumerate_points(Z, 100);
  if (known.size() != 3) return {false, "expected the three points -1, 1/2, 2"};
  const auto report = disk_reports(loci.symmetrized, 7, N, known, 2);
  for (const auto& z : known) {
    bool matched = false;
    for (const auto& d : report.disks)
      for (const auto& k : d.known_points)
        if (k == z) matched = d.verdict == DiskVerdict::Certified && d.bound <= 1;
    if (!matched) return {false, "disk of " + z.value.get_str() + " not certified <= 1"};
    for (const auto& f : loci.generators)
      if (f.evaluate(z.value).valuation() < N - kVanishingSlack)
        return {false, "generator does not vanish at " + z.value.get_str()};
    for (const auto& k : report.known)
      if (k.point == z && !k.vanishes) return {false, "symmetrized generator does not vanish at " + z.value.get_str()};
  }
  return {report.certified, "disks of 2, -1, 1/2 certified with at most one root each"};
}

// ---------------------------------------------------------------- 10. end-to-end run

Outcome end_to_end(const std::string& ck_binary) {
  const auto out = std::filesystem::temp_directory_path() / ("ck-acceptance-" + std::to_string(::getpid()) + ".json");
  const std::string cmd = "\"" + ck_binary + "\" count --scheme Z --depth 2 --out \"" + out.string() + "\" 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {false, "cannot start " + ck_binary};
  std::string stdout_text;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) stdout_text += buf;
  const int status = ::pclose(pipe);
  if (status != 0) return {false, "exit status " + std::to_string(status)};
  std::ifstream in(out);
  if (!in) return {false, "no report written"};
  const auto j = nlohmann::ordered_json::parse(in);
  std::filesystem::remove(out);
  const bool empty = stdout_text.find("∅") != std::string::npos && j.at("found").empty();
  const auto& report = j.at("report");
  const long p = report.at("p").get<long>();
  const bool ok = empty && j.at("verdict").get<bool>() && report.at("certified").get<bool>() && p <= 7 &&
                  report.at("precision").get<long>() == 15;
  return {ok, "answer " + stdout_text.substr(0, stdout_text.find('\n')) + ", p = " + std::to_string(p) +
                  ", N = " + std::to_string(report.at("precision").get<long>())};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string ck_binary = argc > 1 ? argv[1] : "./ck";
  const std::vector<Criterion> criteria{
      {1, "Hopf suite over 2-letter alphabets to weight 5", 10, hopf_suite},
      {2, "reduced coproduct of Li_n, n <= 8", 0, polylog_coproduct},
      {3, "pairing splitting against the brute-force expansion", 0, pairing_splitting},
      {4, "eps-independence survives certified perturbations", 0, perturbation_robustness},
      {5, "distribution relation and log homomorphism to p^-20", 60, functional_equations},
      {6, "zeta_5(3), zeta_7(3) nonzero, two routes agree", 0, zeta_values},
      {7, "geometric ideals and Goncharov dimensions", 60, geometric_oracle},
      {8, "Z[1/3], p = 5: symmetrized generators vanish at -1", 0, minus_one_phenomenon},
      {9, "Z[1/2], p = 7: three points in certified disks", 0, locus_containment},
      {10, "count over Spec Z at depth 2", 600, [&] { return end_to_end(ck_binary); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const Error& e) {
      r = {false, std::string("error[") + error_code_name(e.code()) + "]: " + e.what()};
    } catch (const std::exception& e) {
      r = {false, e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0 && secs >= c.time_limit) {
      r.ok = false;
      r.detail += " [over the " + std::to_string(static_cast<int>(c.time_limit)) + " s limit]";
    }
    std::printf("%s [%d] %s (%.2f s): %s\n", r.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, r.detail.c_str());
    std::fflush(stdout);
    failures += r.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
