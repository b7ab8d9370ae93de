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
#include <vector>

#include "fsjoin/matching.hpp"

namespace fsjoin::detail {

// Incremental Kuhn-Munkres on a graph with n_left <= n_right, phrased as a
// min-cost assignment over c = -w with potentials u (rows) and v (columns),
// u + v <= c. The matching duals are y = -u, y = -v. Rows are added one per
// phase in index order. After k phases the first k rows are matched
// optimally among themselves and every unmatched column still has y = 0.
class HungarianSolver {
 public:
  explicit HungarianSolver(const BipartiteGraph& graph);

  void augment_next();
  std::size_t rows_done() const { return rows_done_; }
  bool complete() const { return rows_done_ == n_; }

  double matched_weight() const;
  bool column_matched(std::size_t col) const { return p_[col + 1] != 0; }

  Matching matching() const;
  std::vector<double> left_duals() const;
  std::vector<double> right_duals() const;

 private:
  const BipartiteGraph& graph_;
  std::size_t n_;
  std::size_t m_;
  std::size_t rows_done_ = 0;
  // 1-indexed; slot 0 is the virtual root column.
  std::vector<double> u_, v_, minv_;
  std::vector<std::size_t> p_, way_;
  std::vector<char> used_;
};

}  // namespace fsjoin::detail
