#include "selftest.hpp"

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "ck/error.hpp"
#include "ck/geometric.hpp"
#include "ck/goncharov.hpp"
#include "ck/loci.hpp"
#include "ck/polylog.hpp"
#include "ck/shuffle.hpp"

namespace ck::cli {

namespace {

struct Check {
  std::string name;
  std::function<bool()> run;
};

std::vector<Check> checks() {
  return {
      {"coproduct of Li_n matches the closed form (n <= 6)",
       [] {
         for (int n = 2; n <= 6; ++n)
           if (!(reduced_coproduct_polylog(n) == polylog_coproduct_formula(n))) return false;
         return true;
       }},
      {"Goncharov dimensions match the Hall oracle on {t2, t3} (weight <= 5)",
       [] {
         auto A = geometric_alphabet({2, 3}, 1);
         for (int m = 1; m <= 5; ++m)
           if (goncharov_dimension(A, m) != hall_oracle_dimension(*A, m)) return false;
         return true;
       }},
      {"depth-2 ideal over Z[1/2] is (Li2 - 1/2*log*Li1)",
       [] {
         auto A = geometric_alphabet({2}, 2);
         auto ideal = eliminate(ev_sharp(A, 2));
         return ideal.generator_strings() == std::vector<std::string>{"Li2 - 1/2*log*Li1"};
       }},
      {"log is a homomorphism on units (p = 7, N = 20)",
       [] {
         const long p = 7, N = 20;
         const Rational a(3), b(-5, 2);
         return padic_log(p, a * b, N).agrees_with(padic_log(p, a, N) + padic_log(p, b, N), N);
       }},
      {"zeta_5(3) is nonzero and both routes agree to 5^-15",
       [] {
         const auto z = padic_zeta(3, 5, 20);
         return !z.is_zero() && z.agrees_with(padic_zeta_distribution(3, 5, 20), 15);
       }},
      {"Z[1/2] at p = 7, depth 2 certifies exactly {-1, 1/2, 2}",
       [] {
         LociOptions o;
         o.prime = 7;
         const auto Z = OpenIntegerScheme::parse("Z[1/2]");
         const auto loci = assemble_loci(Z, 2, 15, o);
         const auto known = enumerate_points(Z, 100);
         return known.size() == 3 && disk_reports(loci.symmetrized, 7, 15, known, 2).certified;
       }},
  };
}

}  // namespace

int run_selftest(std::ostream& out) {
  int failures = 0;
  for (const auto& c : checks()) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = c.run();
    } catch (const Error& e) {
      note = std::string(" [") + error_code_name(e.code()) + ": " + e.what() + "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << (ok ? "PASS " : "FAIL ") << c.name << " (" << secs << " s)" << note << "\n";
    failures += ok ? 0 : 1;
  }
  return failures;
}

}  // namespace ck::cli
