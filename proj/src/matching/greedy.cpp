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

#include <vector>

#include "edge_order.hpp"
#include "fsjoin/matching.hpp"

namespace fsjoin {

Matching greedy_matching(const BipartiteGraph& graph) {
  std::vector<char> col_taken(graph.n_right(), 0);
  Matching out;
  detail::row_greedy(graph, 0, col_taken,
                     [&](std::uint32_t left, std::uint32_t right, double w) { out.add(left, right, w); });
  return out;
}

}  // namespace fsjoin
