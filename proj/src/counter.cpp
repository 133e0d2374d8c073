#include "ck/counter.hpp"

#include <algorithm>

#include "ck/error.hpp"

namespace ck {

std::vector<ScheduleEntry> counting_schedule(const CountingOptions& o) {
  std::vector<ScheduleEntry> out;
  for (int n = o.depth; n <= o.max_depth; ++n)
    for (long N : {o.precision, o.precision + 5, o.precision + 10})
      for (int r : o.refinements) out.push_back({n, N, r});
  return out;
}

nlohmann::ordered_json CountingState::to_json(const OpenIntegerScheme& Z) const {
  nlohmann::ordered_json j;
  j["format"] = "ck-counting-state";
  j["version"] = 1;
  j["scheme"] = Z.to_string();
  j["next_round"] = next_round;
  if (current) {
    j["depth"] = current->depth;
    j["precision"] = current->precision;
    j["max_radius"] = current->max_radius;
  }
  j["found"] = nlohmann::ordered_json::array();
  for (const auto& z : found) j["found"].push_back(z.value.get_str());
  j["verdict"] = verdict;
  if (report) j["report"] = report->to_json();
  return j;
}

CountingState CountingState::from_json(const nlohmann::ordered_json& j, const OpenIntegerScheme& Z) {
  try {
    if (j.at("format").get<std::string>() != "ck-counting-state" || j.at("version").get<int>() != 1)
      throw Error(ErrorCode::ParseError, "not a counting state document");
    if (j.at("scheme").get<std::string>() != Z.to_string())
      throw Error(ErrorCode::InvalidArgument, "checkpoint belongs to another scheme");
    CountingState s;
    s.next_round = j.at("next_round").get<int>();
    for (const auto& z : j.at("found")) {
      Rational v(z.get<std::string>());
      v.canonicalize();
      s.found.push_back(SUnitPoint::make(v, Z.excluded_primes()));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed counting state: ") + e.what());
  }
}

namespace {

void merge_points(std::vector<SUnitPoint>& into, const std::vector<SUnitPoint>& more) {
  for (const auto& z : more)
    if (std::find(into.begin(), into.end(), z) == into.end()) into.push_back(z);
  std::sort(into.begin(), into.end(), [](const SUnitPoint& a, const SUnitPoint& b) { return a.value < b.value; });
}

// The certified verdict, re-checked from scratch.
bool sound(const OpenIntegerScheme& Z, const std::vector<SUnitPoint>& found, const LocusReport& report) {
  if (!report.certified) return false;
  for (const auto& z : found) {
    if (z.value == 0 || z.value == 1 || !Z.is_unit(z.value) || !Z.is_unit(Rational(1 - z.value))) return false;
    bool matched = false;
    for (const auto& d : report.disks)
      for (const auto& k : d.known_points) matched = matched || k == z;
    bool vanishes = false;
    for (const auto& k : report.known)
      if (k.point == z) vanishes = k.vanishes;
    if (!matched || !vanishes) return false;
  }
  long located = 0;
  for (const auto& d : report.disks) located += d.bound;
  return located == static_cast<long>(found.size());
}

}  // namespace

CountResult count_points(const OpenIntegerScheme& Z, const CountingOptions& options,
                         std::optional<CountingState> resume,
                         const std::function<void(const CountingState&)>& on_round) {
  if (options.depth < 1 || options.max_depth < options.depth)
    throw Error(ErrorCode::InvalidArgument, "need 1 <= depth <= max depth");
  if (options.budget < 0) throw Error(ErrorCode::InvalidArgument, "budget must be >= 0");
  const auto schedule = counting_schedule(options);
  CountResult result;
  result.state = resume.value_or(CountingState{});
  CountingState& state = result.state;
  std::optional<AssembledLoci> loci;
  int rounds = 0;
  for (; state.next_round < static_cast<int>(schedule.size()) && rounds < options.budget; ++rounds) {
    const ScheduleEntry entry = schedule[static_cast<std::size_t>(state.next_round)];
    state.current = entry;
    const long b = options.height_bound << (entry.depth - options.depth);
    merge_points(state.found, enumerate_points(Z, b));
    if (!loci || loci->depth != entry.depth || loci->precision != entry.precision)
      loci = assemble_loci(Z, entry.depth, entry.precision, options.loci);
    state.report = disk_reports(loci->symmetrized, loci->p, entry.precision, state.found, entry.max_radius,
                                options.jobs);
    state.report->depth = entry.depth;
    state.verdict = sound(Z, state.found, *state.report);
    ++state.next_round;
    if (on_round) on_round(state);
    if (state.verdict) {
      result.exhausted = false;
      result.points = state.found;
      return result;
    }
  }
  return result;
}

std::string format_point_set(const std::vector<SUnitPoint>& points) {
  if (points.empty()) return "∅";
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i) s += (i ? ", " : "") + points[i].value.get_str();
  return s + "}";
}

}  // namespace ck
