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

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fsjoin/matching.hpp"

namespace fsjoin::detail {

// A row's heaviest edge to a free column.
struct RowKey {
  double weight;
  std::uint32_t left;
  std::uint32_t right;
};

// Max-heap comparator for the strict edge order (weight desc, left asc,
// right asc): "a ranks below b".
struct RanksBelow {
  bool operator()(const RowKey& a, const RowKey& b) const {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.left != b.left) return a.left > b.left;
    return a.right > b.right;
  }
};

// Best positive edge of row i to a column with col_taken == 0, ties to the
// lower column. Returns false when there is none.
inline bool best_free_edge(const BipartiteGraph& graph, std::size_t i, const std::vector<char>& col_taken,
                           RowKey* key) {
  const auto row = graph.row(i);
  double best = 0.0;
  std::size_t arg = row.size();
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] > best && !col_taken[j]) {
      best = row[j];
      arg = j;
    }
  }
  if (arg == row.size()) return false;
  *key = {best, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(arg)};
  return true;
}

// Greedy in the strict edge order over the rows in `keys` (each row's best
// free edge) and the free columns. A popped key whose column was taken
// meanwhile is recomputed and pushed back; keys only go stale downward, so
// every valid pop is the global maximum. emit(left, right, weight) is
// called in selection order and col_taken is updated.
template <class Emit>
void greedy_from_keys(const BipartiteGraph& graph, std::vector<RowKey> keys, std::vector<char>& col_taken,
                      Emit emit) {
  std::size_t free_cols = static_cast<std::size_t>(std::count(col_taken.begin(), col_taken.end(), 0));
  std::make_heap(keys.begin(), keys.end(), RanksBelow{});
  while (!keys.empty() && free_cols > 0) {
    std::pop_heap(keys.begin(), keys.end(), RanksBelow{});
    RowKey top = keys.back();
    keys.pop_back();
    if (col_taken[top.right]) {
      if (best_free_edge(graph, top.left, col_taken, &top)) {
        keys.push_back(top);
        std::push_heap(keys.begin(), keys.end(), RanksBelow{});
      }
      continue;
    }
    col_taken[top.right] = 1;
    --free_cols;
    emit(top.left, top.right, top.weight);
  }
}

// Greedy over rows first_row.. and the free columns.
template <class Emit>
void row_greedy(const BipartiteGraph& graph, std::size_t first_row, std::vector<char>& col_taken, Emit emit) {
  std::vector<RowKey> keys;
  keys.reserve(graph.n_left() - std::min(first_row, graph.n_left()));
  for (std::size_t i = first_row; i < graph.n_left(); ++i) {
    RowKey key;
    if (best_free_edge(graph, i, col_taken, &key)) keys.push_back(key);
  }
  greedy_from_keys(graph, std::move(keys), col_taken, emit);
}

}  // namespace fsjoin::detail
