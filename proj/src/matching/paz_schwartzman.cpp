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

#include <numeric>
#include <string>

#include "fsjoin/error.hpp"
#include "fsjoin/matching.hpp"

namespace fsjoin {

StreamState::StreamState(std::size_t n_left, std::size_t n_right, double epsilon)
    : epsilon_(epsilon), phi_left_(n_left, 0.0), phi_right_(n_right, 0.0) {
  if (!(epsilon >= 0.0)) throw ArgumentError("epsilon must be non-negative");
}

PsResult StreamState::finalize() const {
  PsResult out;
  std::vector<char> left_used(phi_left_.size()), right_used(phi_right_.size());
  for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
    if (left_used[it->left] || right_used[it->right]) continue;
    left_used[it->left] = 1;
    right_used[it->right] = 1;
    out.matching.add(it->left, it->right, it->weight);
  }
  out.dual_sum = dual_sum();
  return out;
}

double StreamState::dual_sum() const {
  return std::accumulate(phi_left_.begin(), phi_left_.end(), 0.0) +
         std::accumulate(phi_right_.begin(), phi_right_.end(), 0.0);
}

PsResult ps_matching(const BipartiteGraph& graph, double epsilon) {
  StreamState state(graph.n_left(), graph.n_right(), epsilon);
  for (std::size_t i = 0; i < graph.n_left(); ++i) {
    const auto row = graph.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      state.push(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), row[j]);
    }
  }
  return state.finalize();
}

}  // namespace fsjoin
