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

#include "hungarian_solver.hpp"

#include <algorithm>
#include <limits>

namespace fsjoin::detail {

HungarianSolver::HungarianSolver(const BipartiteGraph& graph)
    : graph_(graph),
      n_(graph.n_left()),
      m_(graph.n_right()),
      u_(n_ + 1, 0.0),
      v_(m_ + 1, 0.0),
      minv_(m_ + 1, 0.0),
      p_(m_ + 1, 0),
      way_(m_ + 1, 0),
      used_(m_ + 1, 0) {
  for (std::size_t i = 0; i < n_; ++i) {
    const auto row = graph_.row(i);
    const double best = row.empty() ? 0.0 : *std::max_element(row.begin(), row.end());
    u_[i + 1] = -best;
  }
}

void HungarianSolver::augment_next() {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::size_t row = ++rows_done_;
  p_[0] = row;
  std::size_t j0 = 0;
  std::fill(minv_.begin(), minv_.end(), kInf);
  std::fill(used_.begin(), used_.end(), 0);
  do {
    used_[j0] = 1;
    const std::size_t i0 = p_[j0];
    const auto weights = graph_.row(i0 - 1);
    double delta = kInf;
    std::size_t j1 = 0;
    for (std::size_t j = 1; j <= m_; ++j) {
      if (used_[j]) continue;
      const double reduced = -weights[j - 1] - u_[i0] - v_[j];
      if (reduced < minv_[j]) {
        minv_[j] = reduced;
        way_[j] = j0;
      }
      if (minv_[j] < delta) {
        delta = minv_[j];
        j1 = j;
      }
    }
    for (std::size_t j = 0; j <= m_; ++j) {
      if (used_[j]) {
        u_[p_[j]] += delta;
        v_[j] -= delta;
      } else {
        minv_[j] -= delta;
      }
    }
    j0 = j1;
  } while (p_[j0] != 0);
  do {
    const std::size_t j1 = way_[j0];
    p_[j0] = p_[j1];
    j0 = j1;
  } while (j0 != 0);
}

double HungarianSolver::matched_weight() const {
  double total = 0.0;
  for (std::size_t j = 1; j <= m_; ++j) {
    if (p_[j] != 0) total += graph_.weight(p_[j] - 1, j - 1);
  }
  return total;
}

Matching HungarianSolver::matching() const {
  std::vector<std::size_t> col_of_row(n_, 0);
  std::vector<char> has(n_, 0);
  for (std::size_t j = 1; j <= m_; ++j) {
    if (p_[j] != 0) {
      col_of_row[p_[j] - 1] = j - 1;
      has[p_[j] - 1] = 1;
    }
  }
  Matching out;
  out.pairs.reserve(rows_done_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!has[i]) continue;
    out.add(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(col_of_row[i]),
            graph_.weight(i, col_of_row[i]));
  }
  return out;
}

std::vector<double> HungarianSolver::left_duals() const {
  std::vector<double> y(n_);
  for (std::size_t i = 0; i < n_; ++i) y[i] = -u_[i + 1];
  return y;
}

std::vector<double> HungarianSolver::right_duals() const {
  std::vector<double> y(m_);
  for (std::size_t j = 0; j < m_; ++j) y[j] = -v_[j + 1];
  return y;
}

}  // namespace fsjoin::detail
