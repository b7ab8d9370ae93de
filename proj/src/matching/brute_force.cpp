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
#include <string>
#include <vector>

#include "fsjoin/error.hpp"
#include "fsjoin/matching.hpp"

namespace fsjoin {
namespace {

struct Search {
  const BipartiteGraph& graph;
  std::vector<std::uint32_t> current;
  std::vector<std::uint32_t> best;
  std::vector<char> used;
  double best_weight = -1.0;

  void run(std::size_t row, double weight) {
    if (row == graph.n_left()) {
      if (weight > best_weight) {
        best_weight = weight;
        best = current;
      }
      return;
    }
    for (std::uint32_t j = 0; j < graph.n_right(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      current[row] = j;
      run(row + 1, weight + graph.weight(row, j));
      used[j] = 0;
    }
  }
};

Matching enumerate(const BipartiteGraph& graph) {
  Search search{graph, std::vector<std::uint32_t>(graph.n_left()), {},
                std::vector<char>(graph.n_right()), -1.0};
  search.run(0, 0.0);
  Matching out;
  for (std::uint32_t i = 0; i < search.best.size(); ++i) {
    out.add(i, search.best[i], graph.weight(i, search.best[i]));
  }
  return out;
}

}  // namespace

Matching brute_force_matching(const BipartiteGraph& graph) {
  const std::size_t side = std::min(graph.n_left(), graph.n_right());
  if (side > kBruteForceLimit) {
    throw ArgumentError("brute-force matching supports at most " + std::to_string(kBruteForceLimit) +
                        " vertices on the smaller side, got " + std::to_string(side));
  }
  if (graph.n_left() <= graph.n_right()) return enumerate(graph);
  Matching flipped = enumerate(graph.transposed());
  Matching out;
  for (const auto& e : flipped.pairs) out.add(e.right, e.left, e.weight);
  return out;
}

}  // namespace fsjoin
