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
#include <span>
#include <vector>

#include "fsjoin/corpus.hpp"
#include "fsjoin/simfuncs.hpp"

namespace fsjoin {

struct Posting {
  std::uint32_t set_pos;   // position of the set in the collection
  std::uint32_t element;   // element index within the set
  std::uint32_t position;  // rank of the token in the element's token list
};

/// token id -> postings, each list ordered by set position (which is set
/// size, then set id, by the collection's ordering), element, position.
class InvertedIndex {
 public:
  std::span<const Posting> postings(TokenId token) const;
  /// The postings of `token` that fall in the set at `set_pos`.
  std::span<const Posting> postings_in_set(TokenId token, std::uint32_t set_pos) const;

  std::size_t token_count() const { return lists_.size(); }
  std::size_t posting_count() const { return posting_count_; }

 private:
  friend InvertedIndex build_index(const Collection& collection);
  std::vector<std::vector<Posting>> lists_;
  std::size_t posting_count_ = 0;
};

InvertedIndex build_index(const Collection& collection);

/// A pair that survived filtering. r_pos < s_pos in collection order, hence
/// |R| <= |S|.
struct CandidatePair {
  std::uint32_t r_pos = 0;
  std::uint32_t s_pos = 0;
  std::int64_t r_id = 0;
  std::int64_t s_id = 0;
  // Upper bound on the matching score of the pair.
  double utility_ub = 0.0;
  double theta_rs = 0.0;
};

struct FilterOptions {
  SimilarityKind sim = SimilarityKind::Jaccard;
  bool use_positional = true;
  bool use_joint = true;
};

struct FilterCounters {
  std::size_t generated = 0;
  std::size_t pruned_utility = 0;
  std::size_t pruned_positional = 0;
  std::size_t pruned_joint = 0;
  std::size_t postings_scanned = 0;
  std::size_t early_stops = 0;
  // Queries whose remaining bound never dropped below the stopping
  // threshold, so every size-compatible set was passed through.
  std::size_t passthrough_queries = 0;

  std::size_t pruned() const { return pruned_utility + pruned_positional + pruned_joint; }
  FilterCounters& operator+=(const FilterCounters& other);
};

/// Matching weight a pair needs for sim >= delta: delta / (1 + delta) * (|R| + |S|).
double pair_threshold(std::size_t size_r, std::size_t size_s, double delta);

/// Normalized stopping bound of candidate generation: 2 delta / (1 + delta).
double generation_threshold(double delta);

/// Probes R's tokens in global order. Each element spreads a utility of 1
/// over its tokens (JAC), so an unseen set can gain at most the utility of
/// the tokens not yet probed; probing stops once that remainder, divided by
/// |R|, drops below generation_threshold(delta). Only sets after R in
/// collection order with delta * |S| <= |R| are emitted.
std::vector<CandidatePair> generate_candidates(const InvertedIndex& index, const Collection& collection,
                                               std::size_t r_pos, double delta, SimilarityKind sim,
                                               FilterCounters* counters = nullptr);

/// Tightens each candidate's bound against the concrete S and drops pairs
/// whose bound falls below theta_RS. All pairs must share the same r_pos.
std::vector<CandidatePair> refine_candidates(const std::vector<CandidatePair>& pairs,
                                             const InvertedIndex& index, const Collection& collection,
                                             double delta, const FilterOptions& options,
                                             FilterCounters* counters = nullptr);

/// Upper bound on max_s sim(r, s) given that r shares at most `shared` of
/// its distinct tokens with s. Exposed for tests.
double element_utility_bound(const Element& element, std::size_t shared, SimilarityKind sim,
                             const TokenizerOptions& tokenizer);

}  // namespace fsjoin
