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

#include <algorithm>
#include <chrono>
#include <utility>

#include "fsjoin/bench.hpp"
#include "fsjoin/error.hpp"
#include "fsjoin/matching.hpp"

namespace fsjoin {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t since(Clock::time_point from) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - from).count();
}

void check_options(const JoinOptions& options) {
  if (!(options.delta > 0.0 && options.delta <= 1.0)) throw ArgumentError("delta must lie in (0, 1]");
  if (!(options.epsilon >= 0.0)) throw ArgumentError("epsilon must be non-negative");
  if (options.ub_variant && !is_approximate(options.kind)) {
    throw ArgumentError("the upper-bound variant needs gd, ld or ps");
  }
}

ResultPair make_pair(std::int64_t a, std::int64_t b, double score) {
  return a < b ? ResultPair{a, b, score} : ResultPair{b, a, score};
}

void sort_pairs(std::vector<ResultPair>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const ResultPair& x, const ResultPair& y) {
    return std::pair(x.r_id, x.s_id) < std::pair(y.r_id, y.s_id);
  });
}

}  // namespace

JoinReport run_join(const Collection& collection, const JoinOptions& options) {
  check_options(options);
  JoinReport report;
  report.options = options;
  report.n_sets = collection.size();

  auto t = Clock::now();
  const InvertedIndex index = build_index(collection);
  report.timings.init_ns = since(t);

  FilterOptions filter;
  filter.sim = options.sim;
  filter.use_positional = options.refine_filters;
  filter.use_joint = options.refine_filters;
  const VerifyOptions verify{options.epsilon};

  for (std::size_t r = 0; r < collection.size(); ++r) {
    t = Clock::now();
    auto candidates = generate_candidates(index, collection, r, options.delta, options.sim, &report.filter);
    report.timings.candidate_gen_ns += since(t);
    if (candidates.empty()) continue;

    t = Clock::now();
    const auto survivors = refine_candidates(candidates, index, collection, options.delta, filter, &report.filter);
    report.timings.refinement_ns += since(t);

    for (const auto& pair : survivors) {
      const auto& a = collection[pair.r_pos];
      const auto& b = collection[pair.s_pos];
      const VerifyResult result =
          options.ub_variant ? verify_pair_ub(a, b, options.delta, options.kind, options.sim, verify, &report.verify)
                             : verify_pair(a, b, options.delta, options.kind, options.sim, verify, &report.verify);
      if (result.accepted) report.pairs.push_back(make_pair(a.id, b.id, result.score));
    }
  }
  report.timings.dedup_ns = report.verify.dedup_ns;
  report.timings.graph_build_ns = report.verify.graph_ns;
  report.timings.matching_ns = report.verify.matching_ns;
  sort_pairs(report.pairs);
  return report;
}

JoinReport run_oracle_join(const Collection& collection, double delta, SimilarityKind sim) {
  if (!(delta > 0.0 && delta <= 1.0)) throw ArgumentError("delta must lie in (0, 1]");
  JoinReport report;
  report.options.delta = delta;
  report.options.sim = sim;
  report.options.refine_filters = false;
  report.n_sets = collection.size();

  const auto t = Clock::now();
  for (std::size_t i = 0; i < collection.size(); ++i) {
    for (std::size_t j = i + 1; j < collection.size(); ++j) {
      const SetRecord* r = &collection[i];
      const SetRecord* s = &collection[j];
      if (r->size() > s->size()) std::swap(r, s);
      const DedupResult dedup = deduplicate(*r, *s);
      double weight = static_cast<double>(dedup.overlap);
      if (!dedup.r_rest.empty()) {
        BipartiteGraph graph(dedup.r_rest.size(), dedup.s_rest.size());
        for (std::size_t a = 0; a < dedup.r_rest.size(); ++a) {
          for (std::size_t b = 0; b < dedup.s_rest.size(); ++b) {
            graph.set_weight(a, b, element_sim(sim, *dedup.r_rest[a], *dedup.s_rest[b]));
          }
        }
        weight += hungarian(graph).total_weight;
      }
      const double score = fuzzy_score(weight, r->size(), s->size());
      if (score >= delta) report.pairs.push_back(make_pair(r->id, s->id, score));
    }
  }
  report.timings.matching_ns = since(t);
  sort_pairs(report.pairs);
  return report;
}

}  // namespace fsjoin
