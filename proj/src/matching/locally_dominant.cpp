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

#include "fsjoin/matching.hpp"

namespace fsjoin {
namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

// Vertices 0..n_left-1 are left, n_left.. are right. A vertex points at
// its heaviest free neighbour over positive edges, ties to the lower index,
// found by scanning its row or column of the dense matrix.
class PointerChaser {
 public:
  explicit PointerChaser(const BipartiteGraph& graph)
      : graph_(graph),
        n_left_(static_cast<std::uint32_t>(graph.n_left())),
        n_right_(static_cast<std::uint32_t>(graph.n_right())),
        pointer_(graph.vertex_count(), kNone),
        mate_(graph.vertex_count(), kNone) {
    queue_.reserve(graph.vertex_count());
  }

  Matching run() {
    const auto n = static_cast<std::uint32_t>(mate_.size());
    // Everything is free at the start, so right pointers are the column
    // maxima; one row-major pass finds them (strict > keeps the lower row).
    std::vector<double> col_best(n_right_, 0.0);
    for (std::uint32_t i = 0; i < n_left_; ++i) {
      const auto row = graph_.row(i);
      double best = 0.0;
      std::uint32_t arg = kNone;
      for (std::uint32_t j = 0; j < n_right_; ++j) {
        const double w = row[j];
        if (w > best) {
          best = w;
          arg = n_left_ + j;
        }
        if (w > col_best[j]) {
          col_best[j] = w;
          pointer_[n_left_ + j] = i;
        }
      }
      pointer_[i] = arg;
    }
    for (std::uint32_t v = 0; v < n_left_; ++v) try_match(v);
    // Later rounds only revisit vertices whose pointer target got matched.
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const std::uint32_t x = queue_[head];
      const bool left = x < n_left_;
      const std::uint32_t first = left ? n_left_ : 0;
      const std::uint32_t last = left ? n : n_left_;
      for (std::uint32_t y = first; y < last; ++y) {
        if (mate_[y] != kNone || pointer_[y] != x) continue;
        pointer_[y] = repoint(y);
        try_match(y);
      }
    }

    Matching out;
    for (std::uint32_t i = 0; i < n_left_; ++i) {
      if (mate_[i] == kNone) continue;
      const std::uint32_t j = mate_[i] - n_left_;
      out.add(i, j, graph_.weight(i, j));
    }
    return out;
  }

 private:
  std::uint32_t repoint(std::uint32_t v) const {
    double best = 0.0;
    std::uint32_t arg = kNone;
    if (v < n_left_) {
      const auto row = graph_.row(v);
      for (std::uint32_t j = 0; j < n_right_; ++j) {
        if (row[j] > best && mate_[n_left_ + j] == kNone) {
          best = row[j];
          arg = n_left_ + j;
        }
      }
    } else {
      const std::uint32_t j = v - n_left_;
      for (std::uint32_t i = 0; i < n_left_; ++i) {
        const double w = graph_.weight(i, j);
        if (w > best && mate_[i] == kNone) {
          best = w;
          arg = i;
        }
      }
    }
    return arg;
  }

  void try_match(std::uint32_t v) {
    const std::uint32_t u = pointer_[v];
    if (mate_[v] != kNone || u == kNone || pointer_[u] != v) return;
    mate_[v] = u;
    mate_[u] = v;
    queue_.push_back(v);
    queue_.push_back(u);
  }

  const BipartiteGraph& graph_;
  std::uint32_t n_left_;
  std::uint32_t n_right_;
  std::vector<std::uint32_t> pointer_;
  std::vector<std::uint32_t> mate_;
  std::vector<std::uint32_t> queue_;
};

}  // namespace

Matching locally_dominant_matching(const BipartiteGraph& graph) {
  return PointerChaser(graph).run();
}

}  // namespace fsjoin
