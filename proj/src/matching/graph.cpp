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

#include "fsjoin/error.hpp"
#include "fsjoin/matching.hpp"

namespace fsjoin {
namespace {

void check_weight(double w) {
  if (!(w >= 0.0 && w <= 1.0)) throw ArgumentError("edge weight outside [0, 1]: " + std::to_string(w));
}

}  // namespace

BipartiteGraph::BipartiteGraph(std::size_t n_left, std::size_t n_right)
    : n_left_(n_left), n_right_(n_right), weights_(n_left * n_right, 0.0) {}

BipartiteGraph::BipartiteGraph(std::size_t n_left, std::size_t n_right, std::vector<double> weights)
    : n_left_(n_left), n_right_(n_right), weights_(std::move(weights)) {
  if (weights_.size() != n_left * n_right) throw ArgumentError("weight matrix has the wrong size");
  std::for_each(weights_.begin(), weights_.end(), check_weight);
}

BipartiteGraph BipartiteGraph::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t n_left = rows.size();
  const std::size_t n_right = n_left == 0 ? 0 : rows.begin()->size();
  std::vector<double> weights;
  weights.reserve(n_left * n_right);
  for (const auto& row : rows) {
    if (row.size() != n_right) throw ArgumentError("ragged weight matrix");
    weights.insert(weights.end(), row.begin(), row.end());
  }
  return BipartiteGraph(n_left, n_right, std::move(weights));
}

void BipartiteGraph::set_weight(std::size_t left, std::size_t right, double w) {
  check_weight(w);
  weights_.at(left * n_right_ + right) = w;
}

BipartiteGraph BipartiteGraph::transposed() const {
  BipartiteGraph out(n_right_, n_left_);
  for (std::size_t i = 0; i < n_left_; ++i) {
    for (std::size_t j = 0; j < n_right_; ++j) out.weights_[j * n_left_ + i] = weight(i, j);
  }
  return out;
}

bool Matching::is_valid(std::size_t n_left, std::size_t n_right) const {
  std::vector<bool> left_used(n_left), right_used(n_right);
  for (const auto& e : pairs) {
    if (e.left >= n_left || e.right >= n_right) return false;
    if (left_used[e.left] || right_used[e.right]) return false;
    left_used[e.left] = true;
    right_used[e.right] = true;
  }
  return true;
}

}  // namespace fsjoin
