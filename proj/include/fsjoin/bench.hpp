// Copyright 2026 The fsjoin Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fsjoin/corpus.hpp"
#include "fsjoin/filtering.hpp"
#include "fsjoin/simfuncs.hpp"
#include "fsjoin/verify.hpp"

namespace fsjoin {

/// Phase durations in nanoseconds.
struct PhaseTimings {
  std::int64_t init_ns = 0;
  std::int64_t candidate_gen_ns = 0;
  std::int64_t refinement_ns = 0;
  std::int64_t dedup_ns = 0;
  std::int64_t graph_build_ns = 0;
  std::int64_t matching_ns = 0;

  std::int64_t verification_ns() const { return dedup_ns + graph_build_ns + matching_ns; }
  std::int64_t total_ns() const { return init_ns + candidate_gen_ns + refinement_ns + verification_ns(); }
};

struct JoinOptions {
  double delta = 0.7;
  MatcherKind kind = MatcherKind::Hungarian;
  SimilarityKind sim = SimilarityKind::Jaccard;
  double epsilon = 0.001;
  // Score approximate matchers with their upper bound (GD, LD, PS only).
  bool ub_variant = false;
  // Positional and joint refinement; the utility bound always applies.
  bool refine_filters = true;
};

struct ResultPair {
  std::int64_t r_id = 0;  // r_id < s_id
  std::int64_t s_id = 0;
  double score = 0.0;

  friend bool operator==(const ResultPair&, const ResultPair&) = default;
};

struct JoinReport {
  JoinOptions options;
  std::size_t n_sets = 0;
  std::vector<ResultPair> pairs;  // sorted by (r_id, s_id)
  PhaseTimings timings;
  FilterCounters filter;
  VerifyStats verify;
};

/// Self-join: index, generate, refine, verify.
JoinReport run_join(const Collection& collection, const JoinOptions& options);

/// Every unordered pair, deduplicated and matched by the exact Hungarian
/// solver with no filtering and no early exit.
JoinReport run_oracle_join(const Collection& collection, double delta, SimilarityKind sim);

struct AccuracyReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double recall = 1.0;
  double precision = 1.0;
  // approx size - exact size; negative means pairs are missing.
  std::int64_t delta_sets = 0;
};

/// Compares pair sets by (r_id, s_id); scores are ignored. Empty
/// denominators give 1.
AccuracyReport accuracy(const std::vector<ResultPair>& approx, const std::vector<ResultPair>& exact);

struct CompareRow {
  MatcherKind kind = MatcherKind::Hungarian;
  JoinReport report;
  AccuracyReport accuracy;
};

/// Runs each kind against the HG result (computed once). In weight mode
/// every approximate kind must have precision 1, in UB mode recall 1;
/// otherwise GuaranteeViolation is thrown.
std::vector<CompareRow> run_compare(const Collection& collection, double delta, SimilarityKind sim,
                                    const std::vector<MatcherKind>& kinds, bool ub_variant,
                                    double epsilon = 0.001, bool refine_filters = true);

/// Table with one line per kind: matcher, pairs, delta_sets, tp, fp, fn,
/// recall, precision, times in ms.
void write_compare_table(std::ostream& out, const std::vector<CompareRow>& rows);

struct SweepOptions {
  SimilarityKind sim = SimilarityKind::Jaccard;
  std::vector<MatcherKind> kinds{MatcherKind::Hungarian};
  std::vector<double> deltas{0.7};
  std::vector<double> fractions{1.0};
  std::uint64_t seed = 42;
  // Each cell reports the run with the median total time.
  std::size_t repeats = 3;
  double epsilon = 0.001;
  bool ub_variant = false;
  bool refine_filters = true;
};

struct SweepRow {
  double delta = 0.0;
  double fraction = 0.0;
  MatcherKind kind = MatcherKind::Hungarian;
  std::size_t n_sets = 0;
  std::size_t candidates = 0;
  std::size_t pruned = 0;
  std::size_t verified = 0;
  std::size_t pairs = 0;
  PhaseTimings timings;
  AccuracyReport accuracy;  // against HG on the same sample and delta
  std::size_t repeats = 0;
};

/// Cross product of deltas, fractions and kinds. One sample per fraction
/// (seeded from seed and the fraction index), shared by all deltas and
/// kinds.
std::vector<SweepRow> run_sweep(const Collection& collection, const SweepOptions& options);

inline constexpr const char* kSweepSchema = "fsjoin.sweep/1";
inline constexpr const char* kProfileSchema = "fsjoin.profile/1";

/// "#schema=fsjoin.sweep/1", a header row, then one row per cell.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct ProfilePoint {
  std::string kind;
  double offset = 0.0;    // time minus the best time on the instance
  double fraction = 0.0;  // share of instances with offset <= this one
};

struct ProfileSummary {
  std::string kind;
  double arithmetic_mean = 0.0;
  double geometric_mean = 0.0;
};

struct PerformanceProfile {
  std::vector<ProfilePoint> points;
  std::vector<ProfileSummary> summaries;
};

/// times[i][k] is the time of kinds[k] on instance i. Each kind gets a
/// step curve of (offset, cumulative fraction) points, one per distinct
/// offset, plus arithmetic and geometric means of its raw times.
PerformanceProfile performance_profile(const std::vector<std::string>& kinds,
                                       const std::vector<std::vector<double>>& times);

/// Instances are (delta, fraction) cells; time is the total in ms.
PerformanceProfile profile_from_sweep(const std::vector<SweepRow>& rows);

/// "#schema=fsjoin.profile/1" then rows record,matcher,x,y where record is
/// point (x offset ms, y fraction), arithmetic_mean_ms or geometric_mean_ms
/// (x the mean, y empty).
void write_profile_csv(std::ostream& out, const PerformanceProfile& profile);

/// r_id,s_id,score with a header row.
void write_pairs_csv(std::ostream& out, const std::vector<ResultPair>& pairs);

/// Report, timings in ms, counters and the full config as JSON text.
std::string report_json(const JoinReport& report, int indent = 2);

}  // namespace fsjoin
