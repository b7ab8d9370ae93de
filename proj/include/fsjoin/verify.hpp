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
#include <string_view>
#include <vector>

#include "fsjoin/corpus.hpp"
#include "fsjoin/simfuncs.hpp"

namespace fsjoin {

enum class MatcherKind { Hungarian, EfficientVerification, Greedy, LocallyDominant, PazSchwartzman };

inline constexpr MatcherKind kAllMatchers[] = {
    MatcherKind::Hungarian, MatcherKind::EfficientVerification, MatcherKind::Greedy,
    MatcherKind::LocallyDominant, MatcherKind::PazSchwartzman};

/// "hg", "ev", "gd", "ld", "ps".
std::string_view to_string(MatcherKind kind);
MatcherKind parse_matcher(std::string_view name);
/// GD, LD and PS; HG and EV are exact.
bool is_approximate(MatcherKind kind);

enum class VerifyPath { DedupOnly, UbPruned, Matched, EarlyAccept, EarlyReject };
std::string_view to_string(VerifyPath path);

struct VerifyResult {
  double score = 0.0;
  bool accepted = false;
  VerifyPath path = VerifyPath::DedupOnly;
  // Weight credited on the residual graph: the matching weight, an EV
  // bound, the UB-variant bound, or the running UB for UbPruned.
  double matching_weight = 0.0;
  std::size_t overlap = 0;
};

struct DedupResult {
  std::size_t overlap = 0;
  std::vector<const Element*> r_rest;
  std::vector<const Element*> s_rest;
};

/// Removes exactly identical elements (multiset intersection on raw
/// strings). Residuals keep stored element order.
DedupResult deduplicate(const SetRecord& r, const SetRecord& s);

/// W / (|R| + |S| - W).
double fuzzy_score(double weight, std::size_t size_r, std::size_t size_s);

struct VerifyOptions {
  double epsilon = 0.001;
};

/// Per-phase time and path counters, summed over verified pairs.
struct VerifyStats {
  std::int64_t dedup_ns = 0;
  std::int64_t graph_ns = 0;
  std::int64_t matching_ns = 0;

  std::size_t dedup_only = 0;
  std::size_t ub_pruned = 0;
  std::size_t matched = 0;
  std::size_t early_accept = 0;
  std::size_t early_reject = 0;

  // PS pairs that reached post-processing, and how many of those kept
  // fewer edges on the stack than the full residual graph has.
  std::size_t ps_finalized = 0;
  std::size_t ps_below_full = 0;
  std::size_t ps_peak_stack = 0;
  std::size_t ps_stored_edges = 0;
  std::size_t ps_full_edges = 0;

  std::size_t verified() const { return dedup_only + ub_pruned + matched + early_accept + early_reject; }
  void record(VerifyPath path);
  VerifyStats& operator+=(const VerifyStats& other);
};

/// Scores a candidate pair. The smaller set (ties: smaller id) plays R.
/// Deduplicates, then builds the residual graph row by row, keeping
/// UB = |R| - sum(1 - best weight of each row) and returning early once
/// theta_R exceeds it. Otherwise runs the chosen matcher; PS goes through
/// verify_pair_ps.
VerifyResult verify_pair(const SetRecord& r, const SetRecord& s, double delta, MatcherKind kind,
                         SimilarityKind sim, const VerifyOptions& options = {},
                         VerifyStats* stats = nullptr);

/// Verification with the semi-streaming matcher folded into graph
/// building: each row of weights is offered to the stream as soon as it is
/// computed and only stacked edges are retained.
VerifyResult verify_pair_ps(const SetRecord& r, const SetRecord& s, double delta, double epsilon,
                            SimilarityKind sim, VerifyStats* stats = nullptr);

/// Scores with an upper bound on the optimal matching instead of the
/// approximate weight: 2 w(M) for GD/LD, (1 + eps) sum(phi) for PS, capped at
/// min(|R|, |S|). Never rejects a pair the exact verifier accepts.
VerifyResult verify_pair_ub(const SetRecord& r, const SetRecord& s, double delta, MatcherKind kind,
                            SimilarityKind sim, const VerifyOptions& options = {},
                            VerifyStats* stats = nullptr);

}  // namespace fsjoin
