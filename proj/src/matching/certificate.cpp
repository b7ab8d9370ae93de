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

#include <cmath>
#include <numeric>

#include "fsjoin/error.hpp"
#include "fsjoin/matching.hpp"

namespace fsjoin {

CertificateCheck check_duality_certificate(const BipartiteGraph& graph, const Matching& matching,
                                           std::span<const double> left_duals,
                                           std::span<const double> right_duals, double tolerance) {
  if (left_duals.size() != graph.n_left() || right_duals.size() != graph.n_right()) {
    throw ArgumentError("dual vector sizes do not match the graph");
  }
  CertificateCheck out;
  out.matching_valid = matching.is_valid(graph.n_left(), graph.n_right());
  for (const auto& e : matching.pairs) {
    if (e.left < graph.n_left() && e.right < graph.n_right()) out.primal_weight += graph.weight(e.left, e.right);
  }
  out.dual_sum = std::accumulate(left_duals.begin(), left_duals.end(), 0.0) +
                 std::accumulate(right_duals.begin(), right_duals.end(), 0.0);

  // Feasibility is checked with a tight absolute slack; the tolerance only
  // governs the strong-duality gap.
  constexpr double kSlack = 1e-9;
  out.feasible = true;
  for (std::size_t i = 0; i < graph.n_left() && out.feasible; ++i) {
    if (left_duals[i] < -kSlack) {
      out.feasible = false;
      out.violation = MatchedEdge{static_cast<std::uint32_t>(i), UINT32_MAX, left_duals[i]};
    }
  }
  for (std::size_t j = 0; j < graph.n_right() && out.feasible; ++j) {
    if (right_duals[j] < -kSlack) {
      out.feasible = false;
      out.violation = MatchedEdge{UINT32_MAX, static_cast<std::uint32_t>(j), right_duals[j]};
    }
  }
  for (std::size_t i = 0; i < graph.n_left() && out.feasible; ++i) {
    for (std::size_t j = 0; j < graph.n_right(); ++j) {
      if (left_duals[i] + right_duals[j] < graph.weight(i, j) - kSlack) {
        out.feasible = false;
        out.violation = MatchedEdge{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                    graph.weight(i, j)};
        break;
      }
    }
  }
  out.tight = std::abs(out.dual_sum - out.primal_weight) <= tolerance;
  return out;
}

}  // namespace fsjoin
