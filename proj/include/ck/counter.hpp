#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ck/loci.hpp"
#include "ck/sunit.hpp"

namespace ck {

// One (n, N, refinement) triple of the search.
struct ScheduleEntry {
  int depth = 0;
  long precision = 0;
  int max_radius = 0;
  bool operator==(const ScheduleEntry&) const = default;
};

struct CountingOptions {
  int depth = 2;              // first depth tried
  int max_depth = 2;          // last depth tried
  long precision = 15;        // N0; the schedule also tries N0 + 5 and N0 + 10
  std::vector<int> refinements{2, 4};
  long height_bound = 1000;   // naive search bound at the first depth, doubled per extra depth
  int budget = 12;            // number of rounds
  int jobs = 1;
  LociOptions loci;
};

// n-major, then N, then refinement depth.
std::vector<ScheduleEntry> counting_schedule(const CountingOptions& options);

struct CountingState {
  int next_round = 0;
  std::optional<ScheduleEntry> current;
  std::vector<SUnitPoint> found;  // naive search, monotone
  std::optional<LocusReport> report;
  bool verdict = false;

  nlohmann::ordered_json to_json(const OpenIntegerScheme& Z) const;
  // Restores next_round and found; the report is recomputed on resume.
  static CountingState from_json(const nlohmann::ordered_json& j, const OpenIntegerScheme& Z);
};

struct CountResult {
  bool exhausted = true;
  std::vector<SUnitPoint> points;  // X(Z) when !exhausted
  CountingState state;
};

// Runs the naive search and the locus certification round by round until the
// verdict is True or the budget is spent. on_round sees the state after each round.
CountResult count_points(const OpenIntegerScheme& Z, const CountingOptions& options,
                         std::optional<CountingState> resume = std::nullopt,
                         const std::function<void(const CountingState&)>& on_round = {});

// "∅" or "{-1, 1/2, 2}".
std::string format_point_set(const std::vector<SUnitPoint>& points);

}  // namespace ck
