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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fsjoin/error.hpp"
#include "fsjoin/matching.hpp"
#include "oracles.hpp"

namespace fsjoin {
namespace {

const BipartiteGraph kSmall = BipartiteGraph::from_rows({{0.9, 0.5}, {0.8, 0.2}});

BipartiteGraph diagonal(std::size_t n) {
  BipartiteGraph g(n, n);
  for (std::size_t i = 0; i < n; ++i) g.set_weight(i, i, 1.0);
  return g;
}

std::vector<MatchedEdge> sorted_edges(Matching m) {
  std::sort(m.pairs.begin(), m.pairs.end(),
            [](const MatchedEdge& a, const MatchedEdge& b) { return std::pair(a.left, a.right) < std::pair(b.left, b.right); });
  return m.pairs;
}

// Reference greedy: materialize, sort by the strict order, scan.
Matching sorted_greedy(const BipartiteGraph& g) {
  std::vector<MatchedEdge> edges;
  for (std::uint32_t i = 0; i < g.n_left(); ++i)
    for (std::uint32_t j = 0; j < g.n_right(); ++j)
      if (g.weight(i, j) > 0.0) edges.push_back({i, j, g.weight(i, j)});
  std::sort(edges.begin(), edges.end(), [](const MatchedEdge& a, const MatchedEdge& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
  });
  std::vector<bool> lu(g.n_left()), ru(g.n_right());
  Matching m;
  for (const auto& e : edges) {
    if (lu[e.left] || ru[e.right]) continue;
    lu[e.left] = ru[e.right] = true;
    m.add(e.left, e.right, e.weight);
  }
  return m;
}

TEST(Graph, RejectsOutOfRangeWeights) {
  BipartiteGraph g(2, 2);
  EXPECT_THROW(g.set_weight(0, 0, 1.5), ArgumentError);
  EXPECT_THROW(g.set_weight(0, 0, -0.1), ArgumentError);
  EXPECT_THROW(BipartiteGraph(2, 2, {0.1, 0.2, 0.3}), ArgumentError);
  EXPECT_THROW(BipartiteGraph::from_rows({{0.1, 0.2}, {0.3}}), ArgumentError);
}

TEST(Graph, Transpose) {
  const BipartiteGraph t = kSmall.transposed();
  EXPECT_EQ(t.weight(0, 1), 0.8);
  EXPECT_EQ(t.weight(1, 0), 0.5);
}

TEST(Hungarian, Examples) {
  const Matching m = hungarian(kSmall);
  EXPECT_NEAR(m.total_weight, 1.3, 1e-12);
  EXPECT_EQ(sorted_edges(m), (std::vector<MatchedEdge>{{0, 1, 0.5}, {1, 0, 0.8}}));
  EXPECT_NEAR(hungarian(BipartiteGraph::from_rows({{0.7}})).total_weight, 0.7, 1e-12);
  EXPECT_NEAR(hungarian(diagonal(3)).total_weight, 3.0, 1e-12);
  EXPECT_EQ(hungarian(BipartiteGraph(0, 0)).pairs.size(), 0u);
}

TEST(Hungarian, MatchesAssignmentOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const BipartiteGraph g = oracle::random_graph(rng, 9);
    const Matching m = hungarian(g);
    EXPECT_TRUE(m.is_valid(g.n_left(), g.n_right()));
    EXPECT_NEAR(m.total_weight, oracle::assignment(g), 1e-9);
  }
}

TEST(Hungarian, DualsCertifyOptimality) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const BipartiteGraph g = oracle::random_graph(rng, 10);
    const HungarianSolution s = hungarian_with_duals(g);
    const CertificateCheck check = check_duality_certificate(g, s.matching, s.left_duals, s.right_duals);
    EXPECT_TRUE(check.proves_optimal());
  }
}

TEST(BruteForce, Examples) {
  EXPECT_NEAR(brute_force_matching(kSmall).total_weight, 1.3, 1e-12);
  EXPECT_NEAR(brute_force_matching(BipartiteGraph::from_rows({{0.1, 0.9}})).total_weight, 0.9, 1e-12);
  EXPECT_NEAR(brute_force_matching(diagonal(3)).total_weight, 3.0, 1e-12);
  EXPECT_THROW(brute_force_matching(BipartiteGraph(10, 10)), ArgumentError);
}

TEST(BruteForce, MatchesAssignmentOracle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const BipartiteGraph g = oracle::random_graph(rng, 7);
    EXPECT_NEAR(brute_force_matching(g).total_weight, oracle::assignment(g), 1e-9);
  }
}

TEST(Ev, Examples) {
  // The optimum is 1.3, below the threshold. UB after one augmentation is
  // still 1.7, so the run completes.
  const EvOutcome high = ev_hungarian(kSmall, 1.647);
  EXPECT_NE(high.decision, EvDecision::Accept);
  EXPECT_LT(high.value, 1.647);

  const EvOutcome low = ev_hungarian(kSmall, 1.0);
  EXPECT_EQ(low.decision, EvDecision::Accept);
  EXPECT_GE(low.value, 1.0);
  EXPECT_NEAR(low.value, 1.1, 1e-12);
  EXPECT_EQ(low.phases, 0u);

  const EvOutcome zero = ev_hungarian(kSmall, 0.0);
  EXPECT_EQ(zero.decision, EvDecision::Accept);
  EXPECT_EQ(zero.phases, 0u);

  const EvOutcome far = ev_hungarian(kSmall, 1.8);
  EXPECT_EQ(far.decision, EvDecision::Reject);
  EXPECT_EQ(far.phases, 0u);
}

TEST(Ev, NeverMisdecides) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> scale(0.0, 1.5);
  for (int trial = 0; trial < 500; ++trial) {
    const BipartiteGraph g = oracle::random_graph(rng, 9);
    const double opt = oracle::assignment(g);
    const double theta = opt * scale(rng);
    const EvOutcome ev = ev_hungarian(g, theta);
    switch (ev.decision) {
      case EvDecision::Accept:
        EXPECT_GE(opt, theta - 1e-9);
        EXPECT_LE(ev.value, opt + 1e-9);
        break;
      case EvDecision::Reject:
        EXPECT_LT(opt, theta + 1e-9);
        EXPECT_GE(ev.value, opt - 1e-9);
        break;
      case EvDecision::Exact:
        EXPECT_NEAR(ev.value, opt, 1e-9);
        break;
    }
  }
}

TEST(Greedy, Examples) {
  const Matching m = greedy_matching(kSmall);
  EXPECT_NEAR(m.total_weight, 1.1, 1e-12);
  EXPECT_EQ(sorted_edges(m), (std::vector<MatchedEdge>{{0, 0, 0.9}, {1, 1, 0.2}}));
  const Matching tie = greedy_matching(BipartiteGraph::from_rows({{0.4, 0.4}, {0.4, 0.4}}));
  EXPECT_EQ(sorted_edges(tie), (std::vector<MatchedEdge>{{0, 0, 0.4}, {1, 1, 0.4}}));
  EXPECT_NEAR(greedy_matching(BipartiteGraph::from_rows({{0.3}})).total_weight, 0.3, 1e-12);
  EXPECT_TRUE(greedy_matching(BipartiteGraph::from_rows({{0.0}})).pairs.empty());
}

TEST(Greedy, EqualsSortedScanAndHalfApproximates) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    const BipartiteGraph g = oracle::random_graph(rng, 12);
    const Matching m = greedy_matching(g);
    EXPECT_TRUE(m.is_valid(g.n_left(), g.n_right()));
    EXPECT_EQ(sorted_edges(m), sorted_edges(sorted_greedy(g)));
    EXPECT_GE(m.total_weight, 0.5 * hungarian(g).total_weight - 1e-12);
  }
}

TEST(LocallyDominant, Examples) {
  EXPECT_NEAR(locally_dominant_matching(kSmall).total_weight, 1.1, 1e-12);
  EXPECT_TRUE(locally_dominant_matching(BipartiteGraph(0, 0)).pairs.empty());
  EXPECT_TRUE(locally_dominant_matching(BipartiteGraph(3, 0)).pairs.empty());
}

TEST(LocallyDominant, SameEdgesAsGreedy) {
  std::mt19937_64 rng(26);
  std::uniform_int_distribution<int> level(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    BipartiteGraph g = oracle::random_graph(rng, 12, true);
    // coarse weights force many ties
    if (trial % 2 == 0) {
      for (std::size_t i = 0; i < g.n_left(); ++i)
        for (std::size_t j = 0; j < g.n_right(); ++j) g.set_weight(i, j, level(rng) / 4.0);
    }
    const Matching ld = locally_dominant_matching(g);
    EXPECT_TRUE(ld.is_valid(g.n_left(), g.n_right()));
    EXPECT_EQ(sorted_edges(ld), sorted_edges(greedy_matching(g)));
  }
}

TEST(PazSchwartzman, PushTrace) {
  StreamState state(2, 2, 0.0);
  EXPECT_TRUE(state.push(0, 0, 0.9));
  EXPECT_DOUBLE_EQ(state.left_duals()[0], 0.9);
  EXPECT_DOUBLE_EQ(state.right_duals()[0], 0.9);
  EXPECT_FALSE(state.push(0, 1, 0.5));
  EXPECT_FALSE(state.push(1, 0, 0.8));
  EXPECT_TRUE(state.push(1, 1, 0.2));
  const PsResult r = state.finalize();
  EXPECT_EQ(r.matching.pairs, (std::vector<MatchedEdge>{{1, 1, 0.2}, {0, 0, 0.9}}));
  EXPECT_NEAR(r.matching.total_weight, 1.1, 1e-12);
  EXPECT_NEAR(r.dual_sum, 2.2, 1e-12);

  StreamState fresh(1, 1, 0.0);
  EXPECT_FALSE(fresh.push(0, 0, 0.0));
}

TEST(PazSchwartzman, SmallStreams) {
  const PsResult empty = ps_matching(BipartiteGraph(0, 0), 0.0);
  EXPECT_TRUE(empty.matching.pairs.empty());
  EXPECT_EQ(empty.dual_sum, 0.0);
  const PsResult single = ps_matching(BipartiteGraph::from_rows({{0.7}}), 0.0);
  EXPECT_NEAR(single.matching.total_weight, 0.7, 1e-12);
  EXPECT_NEAR(single.dual_sum, 1.4, 1e-12);
  EXPECT_THROW(StreamState(1, 1, -0.5), ArgumentError);
}

TEST(PazSchwartzman, ApproximationAndDualBound) {
  std::mt19937_64 rng(27);
  for (double eps : {0.0, 0.001, 0.1}) {
    for (int trial = 0; trial < 200; ++trial) {
      const BipartiteGraph g = oracle::random_graph(rng, 12);
      const double opt = oracle::assignment(g);
      const PsResult r = ps_matching(g, eps);
      EXPECT_TRUE(r.matching.is_valid(g.n_left(), g.n_right()));
      EXPECT_GE(r.matching.total_weight, opt / (2.0 + eps) - 1e-12);
      EXPECT_GE((1.0 + eps) * r.dual_sum, opt - 1e-9);
      EXPECT_LE(r.matching.total_weight, opt + 1e-9);
    }
  }
}

TEST(Certificate, ScaledPsDualsAreFeasible) {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 100; ++trial) {
    const BipartiteGraph g = oracle::random_graph(rng, 8);
    const double eps = 0.1;
    StreamState state(g.n_left(), g.n_right(), eps);
    for (std::uint32_t i = 0; i < g.n_left(); ++i)
      for (std::uint32_t j = 0; j < g.n_right(); ++j) state.push(i, j, g.weight(i, j));
    std::vector<double> yl(state.left_duals().begin(), state.left_duals().end());
    std::vector<double> yr(state.right_duals().begin(), state.right_duals().end());
    for (auto& y : yl) y *= 1.0 + eps;
    for (auto& y : yr) y *= 1.0 + eps;
    const CertificateCheck check = check_duality_certificate(g, state.finalize().matching, yl, yr);
    EXPECT_TRUE(check.feasible);
    EXPECT_GE(check.dual_sum, oracle::assignment(g) - 1e-9);
  }
}

TEST(Certificate, ZeroDualsAreInfeasible) {
  const std::vector<double> zl(2, 0.0), zr(2, 0.0);
  const CertificateCheck check = check_duality_certificate(kSmall, Matching{}, zl, zr);
  EXPECT_FALSE(check.feasible);
  EXPECT_FALSE(check.proves_optimal());
  EXPECT_TRUE(check.violation.has_value());
  EXPECT_THROW(check_duality_certificate(kSmall, Matching{}, std::vector<double>(1), zr), ArgumentError);
}

TEST(Certificate, SuboptimalMatchingIsNotTight) {
  const HungarianSolution s = hungarian_with_duals(kSmall);
  const CertificateCheck check = check_duality_certificate(kSmall, greedy_matching(kSmall), s.left_duals, s.right_duals);
  EXPECT_TRUE(check.feasible);
  EXPECT_FALSE(check.tight);
}

}  // namespace
}  // namespace fsjoin
