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
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace fsjoin {

/// Complete weighted bipartite graph stored as a dense row-major matrix.
/// Rows are left vertices, columns right vertices; weights lie in [0, 1].
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t n_left, std::size_t n_right);
  BipartiteGraph(std::size_t n_left, std::size_t n_right, std::vector<double> weights);
  static BipartiteGraph from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t n_left() const { return n_left_; }
  std::size_t n_right() const { return n_right_; }
  std::size_t vertex_count() const { return n_left_ + n_right_; }
  std::size_t edge_count() const { return n_left_ * n_right_; }

  double weight(std::size_t left, std::size_t right) const { return weights_[left * n_right_ + right]; }
  void set_weight(std::size_t left, std::size_t right, double w);
  std::span<const double> row(std::size_t left) const {
    return {weights_.data() + left * n_right_, n_right_};
  }

  BipartiteGraph transposed() const;

 private:
  std::size_t n_left_ = 0;
  std::size_t n_right_ = 0;
  std::vector<double> weights_;
};

struct MatchedEdge {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  double weight = 0.0;

  friend bool operator==(const MatchedEdge&, const MatchedEdge&) = default;
};

struct Matching {
  std::vector<MatchedEdge> pairs;
  double total_weight = 0.0;

  void add(std::uint32_t left, std::uint32_t right, double w) {
    pairs.push_back({left, right, w});
    total_weight += w;
  }
  /// True when no vertex repeats and every index is in range.
  bool is_valid(std::size_t n_left, std::size_t n_right) const;
};

/// Maximum-weight matching with the optimal duals that certify it.
struct HungarianSolution {
  Matching matching;
  std::vector<double> left_duals;
  std::vector<double> right_duals;
};

/// Exact maximum-weight matching (Kuhn-Munkres, O(n^3)). Starts from the
/// feasible duals y(left) = max incident weight, y(right) = 0 and adds one
/// left vertex per phase along a shortest augmenting path. Every vertex of
/// the smaller side is matched (zero-weight pairs included). Graphs with
/// more left than right vertices are solved on the transpose.
Matching hungarian(const BipartiteGraph& graph);
HungarianSolution hungarian_with_duals(const BipartiteGraph& graph);

enum class EvDecision { Accept, Reject, Exact };

struct EvOutcome {
  EvDecision decision = EvDecision::Exact;
  // LB for Accept, UB for Reject, the optimal weight for Exact.
  double value = 0.0;
  // Augmentations performed before the decision.
  std::size_t phases = 0;
};

/// Hungarian with early termination against a matching-weight threshold.
/// Before each augmentation phase, with P the current partial matching:
///   UB = w(P) + sum of max incident weights of unmatched left vertices
///   LB = w(P) + greedy completion over unmatched vertices
/// Reject when UB < theta (checked first), Accept when LB >= theta. A run
/// that completes returns Exact with the optimal weight.
EvOutcome ev_hungarian(const BipartiteGraph& graph, double theta);

/// Greedy 1/2-approximation. Positive-weight edges are scanned in the strict
/// order (weight desc, left asc, right asc) and kept when both endpoints are
/// free. Zero-weight edges add nothing and are skipped, so the result is
/// maximal over the positive edges.
Matching greedy_matching(const BipartiteGraph& graph);

/// Locally dominant 1/2-approximation by pointer chasing. Every free vertex
/// points at its heaviest free neighbour (ties to the lower index); mutual
/// pointers are matched and only vertices whose target was taken re-point.
/// Under the shared strict edge order this yields the same edges as
/// greedy_matching.
Matching locally_dominant_matching(const BipartiteGraph& graph);

struct PsResult {
  Matching matching;
  // Sum of phi over all vertices; (1 + epsilon) * dual_sum bounds the
  // optimum from above.
  double dual_sum = 0.0;
};

/// Semi-streaming state: approximate duals phi and a LIFO of kept edges.
class StreamState {
 public:
  StreamState(std::size_t n_left, std::size_t n_right, double epsilon);

  /// Offers edge (u, v, w). Kept when w > (1 + eps)(phi(u) + phi(v)); then
  /// the residual w - phi(u) - phi(v) is added to both duals and the edge
  /// is pushed.
  bool push(std::uint32_t left, std::uint32_t right, double w) {
    double& phi_u = phi_left_[left];
    double& phi_v = phi_right_[right];
    const double covered = phi_u + phi_v;
    if (!(w > (1.0 + epsilon_) * covered)) return false;
    const double residual = w - covered;
    phi_u += residual;
    phi_v += residual;
    stack_.push_back({left, right, w});
    return true;
  }

  /// Unwinds the stack from the top, keeping every edge whose endpoints are
  /// both still free.
  PsResult finalize() const;

  double epsilon() const { return epsilon_; }
  std::span<const double> left_duals() const { return phi_left_; }
  std::span<const double> right_duals() const { return phi_right_; }
  std::span<const MatchedEdge> stack() const { return stack_; }
  std::size_t peak_stack_size() const { return stack_.size(); }
  double dual_sum() const;

 private:
  double epsilon_;
  std::vector<double> phi_left_;
  std::vector<double> phi_right_;
  std::vector<MatchedEdge> stack_;
};

/// Streams the graph row-major through a StreamState and finalizes it.
PsResult ps_matching(const BipartiteGraph& graph, double epsilon);

/// Test oracle: enumerates every injective assignment of the smaller side.
/// Throws ArgumentError when the smaller side exceeds kBruteForceLimit.
inline constexpr std::size_t kBruteForceLimit = 9;
Matching brute_force_matching(const BipartiteGraph& graph);

struct CertificateCheck {
  bool matching_valid = false;
  // y >= 0 and y(u) + y(v) >= w(u, v) on every edge.
  bool feasible = false;
  // sum(y) equals w(M) within the tolerance.
  bool tight = false;
  double dual_sum = 0.0;
  double primal_weight = 0.0;
  std::optional<MatchedEdge> violation;

  /// A feasible, tight pair proves the matching optimal.
  bool proves_optimal() const { return matching_valid && feasible && tight; }
  explicit operator bool() const { return proves_optimal(); }
};

CertificateCheck check_duality_certificate(const BipartiteGraph& graph, const Matching& matching,
                                           std::span<const double> left_duals,
                                           std::span<const double> right_duals,
                                           double tolerance = 1e-7);

}  // namespace fsjoin
