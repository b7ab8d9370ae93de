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

#include <json.hpp>
#include <set>
#include <sstream>

#include "fsjoin/bench.hpp"
#include "fsjoin/error.hpp"
#include "oracles.hpp"

namespace fsjoin {
namespace {

using IdPair = std::pair<std::int64_t, std::int64_t>;

std::set<IdPair> id_set(const std::vector<ResultPair>& pairs) {
  std::set<IdPair> out;
  for (const auto& p : pairs) out.insert({p.r_id, p.s_id});
  return out;
}

JoinOptions options_for(MatcherKind kind, double delta = 0.7, bool ub = false) {
  JoinOptions o;
  o.kind = kind;
  o.delta = delta;
  o.ub_variant = ub;
  return o;
}

const Collection& corpus200() {
  static const Collection c = generate_synthetic(200, 8, 26, 3);
  return c;
}

TEST(Join, IdenticalSetsGiveOnePair) {
  const Collection c = Collection::from_strings({{"red", "green", "blue"}, {"blue", "green", "red"}});
  for (MatcherKind kind : kAllMatchers) {
    const JoinReport r = run_join(c, options_for(kind));
    ASSERT_EQ(r.pairs.size(), 1u);
    EXPECT_EQ(r.pairs[0], (ResultPair{0, 1, 1.0}));
  }
}

TEST(Join, HungarianMatchesBruteForceJoin) {
  const auto truth = oracle::join(corpus200(), 0.7, false);
  const JoinReport r = run_join(corpus200(), options_for(MatcherKind::Hungarian));
  ASSERT_EQ(r.pairs.size(), truth.size());
  for (std::size_t i = 0; i < truth.size(); ++i) {
    EXPECT_EQ(r.pairs[i].r_id, truth[i].r_id);
    EXPECT_EQ(r.pairs[i].s_id, truth[i].s_id);
    EXPECT_NEAR(r.pairs[i].score, truth[i].score, 1e-9);
  }
  const JoinReport oracle_join = run_oracle_join(corpus200(), 0.7, SimilarityKind::Jaccard);
  EXPECT_EQ(id_set(oracle_join.pairs), id_set(r.pairs));
}

TEST(Join, ApproximateSubsetAndUbSuperset) {
  const auto exact = id_set(run_join(corpus200(), options_for(MatcherKind::Hungarian)).pairs);
  for (MatcherKind kind : {MatcherKind::Greedy, MatcherKind::LocallyDominant, MatcherKind::PazSchwartzman}) {
    const auto weight = id_set(run_join(corpus200(), options_for(kind)).pairs);
    const auto ub = id_set(run_join(corpus200(), options_for(kind, 0.7, true)).pairs);
    for (const auto& p : weight) EXPECT_TRUE(exact.count(p));
    for (const auto& p : exact) EXPECT_TRUE(ub.count(p));
  }
  EXPECT_EQ(id_set(run_join(corpus200(), options_for(MatcherKind::EfficientVerification)).pairs), exact);
}

TEST(Join, ReportConservation) {
  for (MatcherKind kind : kAllMatchers) {
    const JoinReport r = run_join(corpus200(), options_for(kind, 0.6));
    EXPECT_EQ(r.filter.generated, r.filter.pruned() + r.verify.verified());
    EXPECT_EQ(r.timings.verification_ns(), r.timings.dedup_ns + r.timings.graph_build_ns + r.timings.matching_ns);
    for (const auto& p : r.pairs) {
      EXPECT_LT(p.r_id, p.s_id);
      EXPECT_GE(p.score, 0.6);
    }
    EXPECT_TRUE(std::is_sorted(r.pairs.begin(), r.pairs.end(), [](const ResultPair& a, const ResultPair& b) {
      return std::pair(a.r_id, a.s_id) < std::pair(b.r_id, b.s_id);
    }));
  }
}

TEST(Join, FiltersOffGivesSameResult) {
  JoinOptions off = options_for(MatcherKind::Hungarian);
  off.refine_filters = false;
  EXPECT_EQ(run_join(corpus200(), off).pairs, run_join(corpus200(), options_for(MatcherKind::Hungarian)).pairs);
}

TEST(Join, BadOptions) {
  EXPECT_THROW(run_join(corpus200(), options_for(MatcherKind::Hungarian, 0.0)), ArgumentError);
  EXPECT_THROW(run_join(corpus200(), options_for(MatcherKind::Hungarian, 0.7, true)), ArgumentError);
  JoinOptions neg;
  neg.epsilon = -1.0;
  EXPECT_THROW(run_join(corpus200(), neg), ArgumentError);
}

TEST(Accuracy, Formulas) {
  const std::vector<ResultPair> exact{{1, 2, 0.9}, {1, 3, 0.8}, {2, 4, 0.7}, {5, 6, 0.75}};
  const std::vector<ResultPair> approx{{1, 2, 0.9}, {2, 4, 0.7}, {7, 8, 0.71}};
  const AccuracyReport a = accuracy(approx, exact);
  EXPECT_EQ(a.tp, 2u);
  EXPECT_EQ(a.fp, 1u);
  EXPECT_EQ(a.fn, 2u);
  EXPECT_DOUBLE_EQ(a.recall, 2.0 / 4.0);
  EXPECT_DOUBLE_EQ(a.precision, 2.0 / 3.0);
  EXPECT_EQ(a.delta_sets, -1);
  const AccuracyReport self = accuracy(exact, exact);
  EXPECT_EQ(self.recall, 1.0);
  EXPECT_EQ(self.precision, 1.0);
  EXPECT_EQ(self.delta_sets, 0);
  const AccuracyReport none = accuracy({}, {});
  EXPECT_EQ(none.recall, 1.0);
  EXPECT_EQ(none.precision, 1.0);
}

TEST(Compare, WeightAndUbModes) {
  const std::vector<MatcherKind> kinds{MatcherKind::Hungarian, MatcherKind::Greedy, MatcherKind::LocallyDominant,
                                       MatcherKind::PazSchwartzman};
  const auto rows = run_compare(corpus200(), 0.7, SimilarityKind::Jaccard, kinds, false);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].accuracy.recall, 1.0);
  EXPECT_EQ(rows[0].accuracy.delta_sets, 0);
  for (const auto& row : rows) EXPECT_EQ(row.accuracy.precision, 1.0);
  EXPECT_EQ(rows[1].report.pairs, rows[2].report.pairs);

  const auto ub_rows = run_compare(corpus200(), 0.7, SimilarityKind::Jaccard, kinds, true);
  for (const auto& row : ub_rows) EXPECT_EQ(row.accuracy.recall, 1.0);

  std::ostringstream table;
  write_compare_table(table, rows);
  EXPECT_NE(table.str().find("precision"), std::string::npos);
  EXPECT_THROW(run_compare(corpus200(), 0.7, SimilarityKind::Jaccard, {}, false), ArgumentError);
}

TEST(Sweep, SingleCellMatchesJoin) {
  SweepOptions o;
  o.repeats = 1;
  const auto rows = run_sweep(corpus200(), o);
  ASSERT_EQ(rows.size(), 1u);
  const JoinReport r = run_join(corpus200(), options_for(MatcherKind::Hungarian));
  EXPECT_EQ(rows[0].pairs, r.pairs.size());
  EXPECT_EQ(rows[0].candidates, r.filter.generated);
  EXPECT_EQ(rows[0].n_sets, corpus200().size());
}

TEST(Sweep, SharedSamplesAndMonotoneWork) {
  SweepOptions o;
  o.kinds = {MatcherKind::Hungarian, MatcherKind::Greedy, MatcherKind::PazSchwartzman};
  o.deltas = {0.5, 0.7, 0.9};
  o.fractions = {0.5, 1.0};
  o.repeats = 1;
  const auto rows = run_sweep(corpus200(), o);
  ASSERT_EQ(rows.size(), 18u);
  for (const auto& a : rows) {
    for (const auto& b : rows) {
      if (a.fraction == b.fraction) EXPECT_EQ(a.n_sets, b.n_sets);
      if (a.fraction == b.fraction && a.delta == b.delta) {
        EXPECT_EQ(a.candidates, b.candidates);
        EXPECT_EQ(a.verified, b.verified);
      }
      // fewer pairs reach verification at higher thresholds
      if (a.fraction == b.fraction && a.kind == b.kind && a.delta < b.delta) EXPECT_GE(a.verified, b.verified);
    }
  }
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  std::istringstream lines(csv.str());
  std::string first;
  std::getline(lines, first);
  EXPECT_EQ(first, std::string("#schema=") + kSweepSchema);
  std::size_t count = 0;
  for (std::string line; std::getline(lines, line);) ++count;
  EXPECT_EQ(count, rows.size() + 1);
  o.deltas.clear();
  EXPECT_THROW(run_sweep(corpus200(), o), ArgumentError);
}

TEST(Profile, OffsetsFromBest) {
  const auto p = performance_profile({"a", "b"}, {{10.0, 12.0}});
  std::vector<double> a_x, b_x;
  for (const auto& pt : p.points) (pt.kind == "a" ? a_x : b_x).push_back(pt.offset);
  EXPECT_EQ(a_x.front(), 0.0);
  EXPECT_EQ(b_x.front(), 2.0);
}

TEST(Profile, CurvesAreMonotone) {
  const std::vector<std::vector<double>> times{{1, 2, 3}, {4, 1, 2}, {2, 2, 9}, {5, 7, 6}};
  const auto p = performance_profile({"x", "y", "z"}, times);
  for (const std::string kind : {"x", "y", "z"}) {
    double last_x = -1, last_y = 0;
    for (const auto& pt : p.points) {
      if (pt.kind != kind) continue;
      EXPECT_GT(pt.offset, last_x);
      EXPECT_GE(pt.fraction, last_y);
      last_x = pt.offset;
      last_y = pt.fraction;
    }
    EXPECT_DOUBLE_EQ(last_y, 1.0);
  }
  // x is best (or tied) on instances 0, 2 and 3
  EXPECT_EQ(p.points.front().kind, "x");
  EXPECT_EQ(p.points.front().offset, 0.0);
  EXPECT_DOUBLE_EQ(p.points.front().fraction, 0.75);
  for (const auto& s : p.summaries) {
    if (s.kind != "x") continue;
    EXPECT_DOUBLE_EQ(s.arithmetic_mean, 3.0);
    EXPECT_NEAR(s.geometric_mean, std::pow(1.0 * 4 * 2 * 5, 0.25), 1e-12);
  }
  EXPECT_THROW(performance_profile({}, {}), ArgumentError);
  EXPECT_THROW(performance_profile({"a", "b"}, {{1.0}}), ArgumentError);
}

TEST(Output, PairsCsvAndJson) {
  const Collection c = Collection::from_strings({{"red", "green"}, {"green", "red"}, {"blue"}});
  const JoinReport r = run_join(c, options_for(MatcherKind::PazSchwartzman));
  std::ostringstream csv;
  write_pairs_csv(csv, r.pairs);
  EXPECT_EQ(csv.str(), "r_id,s_id,score\n0,1,1.000000000000\n");
  const auto doc = nlohmann::json::parse(report_json(r));
  EXPECT_EQ(doc["schema"], "fsjoin.report/1");
  EXPECT_EQ(doc["config"]["matcher"], "ps");
  EXPECT_EQ(doc["pair_count"], 1);
  EXPECT_TRUE(doc.contains("timings_ms"));
}

}  // namespace
}  // namespace fsjoin
