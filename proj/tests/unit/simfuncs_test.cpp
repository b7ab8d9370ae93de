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

#include <random>
#include <string>

#include "fsjoin/error.hpp"
#include "fsjoin/simfuncs.hpp"
#include "oracles.hpp"

namespace fsjoin {
namespace {

std::string random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter('a', 'd');
  std::string w(len(rng), 'a');
  for (auto& c : w) c = static_cast<char>(letter(rng));
  return w;
}

TEST(Jaccard, Examples) {
  const std::vector<TokenId> a{1, 2, 3}, b{2, 3, 4}, c{1, 2}, d{1}, e{2};
  EXPECT_DOUBLE_EQ(jaccard(a, b), 0.5);
  EXPECT_DOUBLE_EQ(jaccard(c, c), 1.0);
  EXPECT_DOUBLE_EQ(jaccard(d, e), 0.0);
  EXPECT_DOUBLE_EQ(jaccard({}, {}), 1.0);
  EXPECT_EQ(intersection_size(a, b), 2u);
}

TEST(Jaccard, MatchesSetAlgebra) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<TokenId> tok(0, 15);
  for (int trial = 0; trial < 300; ++trial) {
    std::set<TokenId> sa, sb;
    for (int i = 0; i < 6; ++i) sa.insert(tok(rng));
    for (int i = 0; i < 6; ++i) sb.insert(tok(rng));
    const std::vector<TokenId> a(sa.begin(), sa.end()), b(sb.begin(), sb.end());
    EXPECT_NEAR(jaccard(a, b), oracle::jaccard(a, b), 1e-12);
    EXPECT_DOUBLE_EQ(jaccard(a, b), jaccard(b, a));
  }
}

TEST(Levenshtein, Examples) {
  EXPECT_EQ(levenshtein("", "abc"), 3u);
  EXPECT_EQ(levenshtein("abc", "abc"), 0u);
  EXPECT_EQ(levenshtein("kitten", "sitting"), oracle::levenshtein("kitten", "sitting"));
  EXPECT_EQ(levenshtein("kitten", "sitting"), 3u);
}

TEST(Levenshtein, MatchesFullTable) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::string a = random_word(rng, 9), b = random_word(rng, 9);
    EXPECT_EQ(levenshtein(a, b), oracle::levenshtein(a, b)) << a << " / " << b;
    EXPECT_EQ(levenshtein(a, b), levenshtein(b, a));
  }
}

TEST(Neds, Examples) {
  EXPECT_DOUBLE_EQ(neds("abc", "abc"), 1.0);
  EXPECT_NEAR(neds("kitten", "sitting"), oracle::neds("kitten", "sitting"), 1e-12);
  EXPECT_NEAR(neds("kitten", "sitting"), 1.0 - 3.0 / 7.0, 1e-12);
  EXPECT_DOUBLE_EQ(neds("a", "b"), 0.0);
  EXPECT_DOUBLE_EQ(neds("", ""), 1.0);
}

TEST(Neds, InUnitRangeAndSymmetric) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string a = random_word(rng, 8), b = random_word(rng, 8);
    const double v = neds(a, b);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    EXPECT_DOUBLE_EQ(v, neds(b, a));
    EXPECT_NEAR(v, oracle::neds(a, b), 1e-12);
  }
}

TEST(ElementSim, DispatchesOnKind) {
  Element r{"abc", {1, 2, 3}}, s{"abc", {2, 3, 4}};
  EXPECT_DOUBLE_EQ(element_sim(SimilarityKind::Jaccard, r, s), 0.5);
  EXPECT_DOUBLE_EQ(element_sim(SimilarityKind::NormalizedEdit, r, s), 1.0);
  EXPECT_DOUBLE_EQ(element_sim(SimilarityKind::Jaccard, r, r), 1.0);
  EXPECT_DOUBLE_EQ(element_sim(SimilarityKind::Jaccard, r, s), element_sim(SimilarityKind::Jaccard, s, r));
}

TEST(ElementSim, ParseNames) {
  EXPECT_EQ(parse_similarity("jac"), SimilarityKind::Jaccard);
  EXPECT_EQ(parse_similarity("NEDS"), SimilarityKind::NormalizedEdit);
  EXPECT_EQ(to_string(SimilarityKind::NormalizedEdit), "neds");
  EXPECT_THROW(parse_similarity("cosine"), ArgumentError);
}

}  // namespace
}  // namespace fsjoin
