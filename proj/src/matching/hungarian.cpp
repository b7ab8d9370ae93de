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
#include <optional>
#include <vector>

#include "fsjoin/matching.hpp"
#include "edge_order.hpp"
#include "hungarian_solver.hpp"

namespace fsjoin {
namespace {

HungarianSolution solve_oriented(const BipartiteGraph& graph) {
  detail::HungarianSolver solver(graph);
  while (!solver.complete()) solver.augment_next();
  return {solver.matching(), solver.left_duals(), solver.right_duals()};
}

}  // namespace

HungarianSolution hungarian_with_duals(const BipartiteGraph& graph) {
  if (graph.n_left() <= graph.n_right()) return solve_oriented(graph);
  HungarianSolution flipped = solve_oriented(graph.transposed());
  HungarianSolution out;
  for (const auto& e : flipped.matching.pairs) out.matching.add(e.right, e.left, e.weight);
  std::sort(out.matching.pairs.begin(), out.matching.pairs.end(),
            [](const MatchedEdge& a, const MatchedEdge& b) { return a.left < b.left; });
  out.left_duals = std::move(flipped.right_duals);
  out.right_duals = std::move(flipped.left_duals);
  return out;
}

Matching hungarian(const BipartiteGraph& graph) { return hungarian_with_duals(graph).matching; }

EvOutcome ev_hungarian(const BipartiteGraph& input, double theta) {
  if (input.n_left() > input.n_right()) return ev_hungarian(input.transposed(), theta);
  const BipartiteGraph& graph = input;
  const std::size_t n = graph.n_left();
  const std::size_t m = graph.n_right();

  // suffix_max[k] = sum of row maxima over rows k..n-1.
  std::vector<double> suffix_max(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    const auto row = graph.row(i);
    suffix_max[i] = suffix_max[i + 1] + (m == 0 ? 0.0 : *std::max_element(row.begin(), row.end()));
  }

  // Phase 0 needs no solver state, so the solver is built on first use.
  std::optional<detail::HungarianSolver> solver;
  // Matched columns only ever grow, one per phase, so each open row's best
  // edge to an unmatched column is cached and rescanned only when that
  // column gets matched.
  std::vector<char> matched_cols(m, 0), scratch(m);
  std::vector<detail::RowKey> best(n);
  std::vector<char> has_best(n);
  for (std::size_t i = 0; i < n; ++i) has_best[i] = detail::best_free_edge(graph, i, matched_cols, &best[i]);

  std::vector<detail::RowKey> keys;
  for (std::size_t k = 0; k < n; ++k) {
    const double matched = solver ? solver->matched_weight() : 0.0;
    const double upper = matched + suffix_max[k];
    if (upper < theta) return {EvDecision::Reject, upper, k};

    // Rows 0..k-1 are exactly the matched ones; the rest are completed
    // greedily in strict edge order.
    if (solver) {
      for (std::size_t j = 0; j < m; ++j) {
        if (matched_cols[j] || !solver->column_matched(j)) continue;
        matched_cols[j] = 1;
        for (std::size_t i = k; i < n; ++i) {
          if (has_best[i] && best[i].right == j) {
            has_best[i] = detail::best_free_edge(graph, i, matched_cols, &best[i]);
          }
        }
      }
    }
    keys.clear();
    double ceiling = matched;
    for (std::size_t i = k; i < n; ++i) {
      if (!has_best[i]) continue;
      keys.push_back(best[i]);
      ceiling += best[i].weight;
    }
    // The greedy completion cannot beat every open row taking its best
    // free edge, so it is skipped when even that misses theta.
    if (ceiling >= theta) {
      scratch = matched_cols;
      double lower = matched;
      detail::greedy_from_keys(graph, keys, scratch, [&](std::uint32_t, std::uint32_t, double w) { lower += w; });
      if (lower >= theta) return {EvDecision::Accept, lower, k};
    }

    if (!solver) solver.emplace(graph);
    solver->augment_next();
  }
  return {EvDecision::Exact, solver ? solver->matched_weight() : 0.0, n};
}

}  // namespace fsjoin
