#include <doctest.h>

#include "ck/basis.hpp"
#include "ck/basis_io.hpp"
#include "ck/counter.hpp"
#include "ck/loci.hpp"
#include "frozen.hpp"

using namespace ck;

namespace {

const BasisResult& qs2_depth4() {
  static const BasisResult r = build_basis(2, 4);
  return r;
}

bool close(const Approx& a, const Approx& b, long digits) {
  auto d = a - b;
  return !d.is_determined() ? d.precision() >= digits : d.valuation() >= digits;
}

}  // namespace

TEST_CASE("basis for q_s = 2 up to weight 4") {
  const auto& r = qs2_depth4();
  REQUIRE(r.basis.complete);
  CHECK(r.basis.p == 5);
  CHECK(r.basis.q_M == 3);
  std::vector<std::string> names;
  for (const auto& g : r.basis.generators) names.push_back(g.to_string());
  CHECK(names == frozen::kBasisQs2Depth4);
}

TEST_CASE("pairing by devissage agrees with the word expansions") {
  auto r = qs2_depth4();
  const auto& B = r.basis;
  long cases = 0;
  for (int m = 1; m <= 4; ++m) {
    auto words = words_of_weight(*B.alphabet, m);
    for (const auto& mono : B.monomials(m)) {
      auto expansion = monomial_word_expansion(mono, B, r.table);
      for (const auto& w : words) {
        auto it = expansion.find(w);
        Approx want = it == expansion.end() ? Approx(B.p, 0) : it->second;
        CHECK(close(pair_with_word(mono, w, B, r.table), want, B.precision));
        ++cases;
      }
    }
  }
  CHECK(cases > 300);
}

TEST_CASE("even-weight expansions reproduce the periods") {
  auto r = qs2_depth4();
  const auto& B = r.basis;
  for (Rational a : {Rational(-2), Rational(9), Rational(-1, 8), Rational(4, 3)}) {
    for (int m : {2, 4}) {
      const auto& rec = expand_polylog(a, m, B, r.table);
      auto monos = B.monomials(m);
      PadicNumber sum = PadicNumber::zero(B.p, rec.period.precision());
      for (std::size_t j = 0; j < monos.size(); ++j)
        sum += PadicNumber::from_approx(rec.coefficients[j], rec.period.precision()) *
               monomial_period(monos[j], B, r.table);
      CHECK(sum.agrees_with(rec.period, B.precision));
    }
  }
}

TEST_CASE("basis serialization is byte-stable") {
  const auto& r = qs2_depth4();
  auto once = basis_to_json(r).dump();
  auto twice = basis_to_json(basis_from_json(nlohmann::ordered_json::parse(once))).dump();
  CHECK(once == twice);
}

TEST_CASE("the six Moebius maps form a group") {
  for (int g = 0; g < kMoebiusCount; ++g) {
    CHECK(moebius_compose(g, 0) == g);
    CHECK(moebius_compose(0, g) == g);
    int inverses = 0;
    for (int h = 0; h < kMoebiusCount; ++h) inverses += moebius_compose(g, h) == 0 ? 1 : 0;
    CHECK(inverses == 1);
    for (int h = 0; h < kMoebiusCount; ++h)
      for (int k = 0; k < kMoebiusCount; ++k)
        CHECK(moebius_compose(moebius_compose(g, h), k) == moebius_compose(g, moebius_compose(h, k)));
  }
}

TEST_CASE("symmetrization is idempotent and invariant") {
  LociOptions o;
  o.prime = 7;
  auto loci = assemble_loci(OpenIntegerScheme::parse("Z[1/2]"), 2, 15, o);
  auto again = symmetrize(loci.symmetrized);
  CHECK(again.size() == loci.symmetrized.size());
  for (const auto& f : loci.symmetrized)
    for (int g : {1, 2}) {
      auto moved = f.precompose(g).monic();
      bool present = false;
      for (const auto& h : loci.symmetrized) present = present || h.monic().same_as(moved);
      CHECK(present);
    }
}

TEST_CASE("Z[1/2] at p = 7: the three points are certified") {
  LociOptions o;
  o.prime = 7;
  const auto Z = OpenIntegerScheme::parse("Z[1/2]");
  auto loci = assemble_loci(Z, 2, 15, o);
  auto report = disk_reports(loci.symmetrized, 7, 15, enumerate_points(Z, 100), 2);
  CHECK(report.certified);
  REQUIRE(report.known.size() == 3);
  for (const auto& k : report.known) CHECK(k.vanishes);
}

TEST_CASE("Z[1/3] at p = 5: the symmetrized generators vanish at -1") {
  LociOptions o;
  o.prime = 5;
  const long N = 15;
  auto loci = assemble_loci(OpenIntegerScheme::parse("Z[1/3]"), 2, N, o);
  REQUIRE_FALSE(loci.symmetrized.empty());
  for (const auto& f : loci.symmetrized) CHECK(f.evaluate(-1).valuation() >= N - kVanishingSlack);
}

TEST_CASE("counting over Spec Z") {
  CountingOptions o;
  auto r = count_points(OpenIntegerScheme::parse("Z"), o);
  CHECK_FALSE(r.exhausted);
  CHECK(r.points.empty());
  CHECK(format_point_set(r.points) == "∅");
  CHECK(r.state.verdict);
}

TEST_CASE("an empty budget reports exhaustion") {
  CountingOptions o;
  o.budget = 0;
  CHECK(count_points(OpenIntegerScheme::parse("Z[1/2]"), o).exhausted);
}

TEST_CASE("counting state round-trips and resumes") {
  const auto Z = OpenIntegerScheme::parse("Z[1/2]");
  CountingOptions o;
  o.loci.prime = 7;
  o.budget = 1;
  o.height_bound = 1;  // finds only -1, so the first round cannot certify
  auto first = count_points(Z, o);
  CHECK(first.exhausted);
  auto j = first.state.to_json(Z);
  auto restored = CountingState::from_json(j, Z);
  CHECK(restored.next_round == first.state.next_round);
  CHECK(restored.found.size() == 1);
  o.budget = 12;
  o.height_bound = 100;
  auto resumed = count_points(Z, o, restored);
  CHECK_FALSE(resumed.exhausted);
  CHECK(format_point_set(resumed.points) == "{-1, 1/2, 2}");
  CHECK(counting_schedule(o).size() == 6);
}
