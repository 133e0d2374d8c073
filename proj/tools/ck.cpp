// Command-line front end: basis | geom | loci | count | selftest.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ck/basis_io.hpp"
#include "ck/counter.hpp"
#include "ck/error.hpp"
#include "ck/geometric.hpp"
#include "ck/loci.hpp"
#include "selftest.hpp"

namespace {

constexpr const char* kToolVersion = "ck 1.0";

struct RunConfig {
  std::string scheme = "Z";
  int depth = 2;
  int max_depth = 0;  // 0: same as depth
  std::optional<long> prime;
  long precision = 15;
  long height_bound = 1000;
  int budget = 12;
  int jobs = 1;
  int refinement = 2;
  std::optional<long> qs;
  std::string out;
  std::string resume;
};

std::optional<std::filesystem::path> cache_dir() {
  if (const char* dir = std::getenv("CK_CACHE_DIR"); dir && *dir) return std::filesystem::path(dir);
  return std::nullopt;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ck::Error(ck::ErrorCode::IoError, "cannot write " + path);
  f << text;
}

ck::OrderedJson header(const char* format) {
  ck::OrderedJson j;
  j["format"] = format;
  j["version"] = 1;
  j["tool"] = kToolVersion;
  return j;
}

int cmd_basis(const RunConfig& c) {
  const long q_s = c.qs ? *c.qs : ck::OpenIntegerScheme::parse(c.scheme).largest_excluded_or_two();
  ck::BasisSchedule schedule;
  schedule.initial_precision = std::max(schedule.initial_precision, c.precision);
  if (c.height_bound != RunConfig{}.height_bound) schedule.initial_height = c.height_bound;
  auto r = ck::cached_build_basis(q_s, c.depth, schedule, c.prime, cache_dir());
  const auto& B = r.basis;
  std::cerr << "q_M = " << B.q_M << ", p = " << B.p << ", eps = p^-" << B.precision << ", height " << B.height << "\n";
  for (const auto& g : B.generators) std::cerr << "  " << g.to_string() << "\n";
  emit(c.out, ck::basis_to_json(r).dump(1) + "\n");
  return 0;
}

int cmd_geom(const RunConfig& c) {
  const auto Z = ck::OpenIntegerScheme::parse(c.scheme);
  const auto alphabet = ck::geometric_alphabet(Z.excluded_primes(), c.depth);
  ck::GoncharovAlgebra goncharov(alphabet);
  const auto ideal = ck::eliminate(ck::ev_sharp(alphabet, c.depth), goncharov);
  for (const auto& g : ideal.generator_strings()) std::cout << g << "\n";
  if (!c.out.empty()) emit(c.out, ck::serialize_ideal(ideal) + "\n");
  return 0;
}

ck::LociOptions loci_options(const RunConfig& c) {
  ck::LociOptions o;
  o.prime = c.prime;
  o.cache_dir = cache_dir();
  return o;
}

int cmd_loci(const RunConfig& c) {
  const auto Z = ck::OpenIntegerScheme::parse(c.scheme);
  const auto loci = ck::assemble_loci(Z, c.depth, c.precision, loci_options(c));
  const auto known = ck::enumerate_points(Z, c.height_bound);
  auto report = ck::disk_reports(loci.symmetrized, loci.p, c.precision, known, c.refinement, c.jobs);
  report.depth = c.depth;
  auto j = header("ck-loci");
  j["scheme"] = Z.to_string();
  j["ideal"] = ck::OrderedJson::parse(ck::serialize_ideal(loci.ideal));
  j["generators"] = ck::OrderedJson::array();
  for (const auto& f : loci.generators) j["generators"].push_back(f.to_json());
  j["report"] = report.to_json();
  std::cout << "p = " << loci.p << ", N = " << c.precision << "\n";
  for (const auto& d : report.disks)
    std::cout << "  disk " << d.residue << ": "
              << (d.verdict == ck::DiskVerdict::Certified ? "certified <= " + std::to_string(d.bound) : "indeterminate")
              << (d.known_points.empty() ? "" : " (" + ck::format_point_set(d.known_points) + ")") << "\n";
  std::cout << (report.certified ? "certified" : "not certified") << "\n";
  if (!c.out.empty()) emit(c.out, j.dump(1) + "\n");
  return 0;
}

int cmd_count(const RunConfig& c) {
  const auto Z = ck::OpenIntegerScheme::parse(c.scheme);
  ck::CountingOptions o;
  o.depth = c.depth;
  o.max_depth = c.max_depth ? c.max_depth : c.depth;
  o.precision = c.precision;
  o.height_bound = c.height_bound;
  o.budget = c.budget;
  o.jobs = c.jobs;
  o.loci = loci_options(c);
  std::optional<ck::CountingState> resume;
  if (!c.resume.empty()) {
    std::ifstream in(c.resume);
    if (!in) throw ck::Error(ck::ErrorCode::IoError, "cannot read " + c.resume);
    resume = ck::CountingState::from_json(ck::OrderedJson::parse(in), Z);
  }
  auto checkpoint = [&](const ck::CountingState& s) {
    std::cerr << "round " << s.next_round << ": n = " << s.current->depth << ", N = " << s.current->precision
              << ", refinement " << s.current->max_radius << " -> " << (s.verdict ? "certified" : "open") << "\n";
    if (!c.out.empty()) emit(c.out, s.to_json(Z).dump(1) + "\n");
  };
  const auto result = ck::count_points(Z, o, resume, checkpoint);
  if (result.exhausted) {
    std::cout << "budget exhausted; found so far " << ck::format_point_set(result.state.found) << "\n";
    if (!c.out.empty()) std::cout << "state: " << c.out << "\n";
    return 3;
  }
  std::cout << ck::format_point_set(result.points) << "\n";
  if (!c.out.empty()) std::cout << "report: " << c.out << "\n";
  return 0;
}

void add_common(CLI::App* app, RunConfig& c) {
  app->add_option("--scheme", c.scheme, "open subscheme: Z, Z[1/2,1/3] or Z>5");
  app->add_option("--depth", c.depth, "polylogarithmic depth n")->check(CLI::PositiveNumber);
  app->add_option("--prime", c.prime, "auxiliary prime p");
  app->add_option("--precision", c.precision, "p-adic precision N (eps = p^-N)")->check(CLI::PositiveNumber);
  app->add_option("--out", c.out, "output file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chabauty-Kim loci for the thrice-punctured line over open subschemes of Spec Z"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  RunConfig c;

  auto* basis = app.add_subcommand("basis", "polylogarithmic basis for receding Z");
  add_common(basis, c);
  basis->add_option("--qs", c.qs, "largest excluded prime q_s");
  basis->add_option("--height-bound", c.height_bound, "initial point height bound");

  auto* geom = app.add_subcommand("geom", "image ideal of the cocycle evaluation map");
  add_common(geom, c);

  auto* loci = app.add_subcommand("loci", "assemble loci and certify residue disks");
  add_common(loci, c);
  loci->add_option("--height-bound", c.height_bound, "naive search height bound");
  loci->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  loci->add_option("--refinement", c.refinement, "deepest ball radius p^-r")->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count", "search points and certify the locus in tandem");
  add_common(count, c);
  count->add_option("--max-depth", c.max_depth, "largest depth in the schedule");
  count->add_option("--height-bound", c.height_bound, "naive search height bound");
  count->add_option("--budget", c.budget, "number of schedule rounds")->check(CLI::NonNegativeNumber);
  count->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  count->add_option("--resume", c.resume, "checkpoint written by an earlier --out");

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*basis) return cmd_basis(c);
    if (*geom) return cmd_geom(c);
    if (*loci) return cmd_loci(c);
    if (*count) return cmd_count(c);
    if (*selftest) return ck::cli::run_selftest(std::cout) == 0 ? 0 : 1;
  } catch (const ck::Error& e) {
    std::cerr << "error[" << ck::error_code_name(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
