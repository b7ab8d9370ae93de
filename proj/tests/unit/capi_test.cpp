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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fsjoin/fsjoin.h"

namespace {

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / (std::string("fsjoin_capi_") + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fsj_collection* generated(std::size_t n, std::uint64_t seed) {
  fsj_synthetic_options o;
  fsj_synthetic_options_init(&o);
  o.n_sets = n;
  o.seed = seed;
  fsj_collection* c = nullptr;
  EXPECT_EQ(fsj_collection_generate(&o, nullptr, &c), FSJ_OK);
  return c;
}

TEST(CApi, ParseNames) {
  fsj_matcher m;
  EXPECT_EQ(fsj_parse_matcher("ld", &m), FSJ_OK);
  EXPECT_EQ(m, FSJ_MATCHER_LD);
  EXPECT_EQ(fsj_parse_matcher("nope", &m), FSJ_ERR_ARGUMENT);
  EXPECT_NE(std::string(fsj_last_error()).find("nope"), std::string::npos);
  fsj_similarity s;
  EXPECT_EQ(fsj_parse_similarity("neds", &s), FSJ_OK);
  EXPECT_EQ(s, FSJ_SIM_NEDS);
  EXPECT_EQ(fsj_parse_matcher(nullptr, &m), FSJ_ERR_ARGUMENT);
}

TEST(CApi, LoadErrors) {
  fsj_collection* c = nullptr;
  EXPECT_EQ(fsj_collection_load("/nonexistent/x.txt", nullptr, &c), FSJ_ERR_IO);
  EXPECT_EQ(c, nullptr);
  EXPECT_STRNE(fsj_last_error(), "");
}

TEST(CApi, JoinMatchesOracle) {
  fsj_collection* c = generated(150, 4);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(fsj_collection_size(c), 150u);

  fsj_join_config config;
  fsj_join_config_init(&config);
  fsj_report* join = nullptr;
  ASSERT_EQ(fsj_join(c, &config, &join), FSJ_OK);
  fsj_report* brute = nullptr;
  ASSERT_EQ(fsj_oracle_join(c, config.delta, config.sim, &brute), FSJ_OK);
  ASSERT_EQ(fsj_report_pair_count(join), fsj_report_pair_count(brute));
  for (std::size_t i = 0; i < fsj_report_pair_count(join); ++i) {
    fsj_pair a, b;
    ASSERT_EQ(fsj_report_pair(join, i, &a), FSJ_OK);
    ASSERT_EQ(fsj_report_pair(brute, i, &b), FSJ_OK);
    EXPECT_EQ(a.r_id, b.r_id);
    EXPECT_EQ(a.s_id, b.s_id);
    EXPECT_NEAR(a.score, b.score, 1e-9);
  }
  fsj_pair p;
  EXPECT_EQ(fsj_report_pair(join, 1u << 30, &p), FSJ_ERR_ARGUMENT);

  char* json = nullptr;
  ASSERT_EQ(fsj_report_json(join, &json), FSJ_OK);
  EXPECT_NE(std::string(json).find("fsjoin.report/1"), std::string::npos);
  fsj_string_free(json);

  const std::string path = temp_path("pairs.csv");
  ASSERT_EQ(fsj_report_write_pairs(join, path.c_str()), FSJ_OK);
  EXPECT_EQ(slurp(path).rfind("r_id,s_id,score\n", 0), 0u);

  fsj_report_free(join);
  fsj_report_free(brute);
  fsj_collection_free(c);
}

TEST(CApi, BadConfigAndGuarantees) {
  fsj_collection* c = generated(60, 2);
  fsj_join_config config;
  fsj_join_config_init(&config);
  config.delta = 2.0;
  fsj_report* r = nullptr;
  EXPECT_EQ(fsj_join(c, &config, &r), FSJ_ERR_ARGUMENT);
  EXPECT_EQ(r, nullptr);
  config.delta = 0.7;
  config.matcher = FSJ_MATCHER_HG;
  config.ub_variant = 1;
  EXPECT_EQ(fsj_join(c, &config, &r), FSJ_ERR_ARGUMENT);

  config.ub_variant = 0;
  const fsj_matcher kinds[] = {FSJ_MATCHER_HG, FSJ_MATCHER_EV, FSJ_MATCHER_GD};
  char* table = nullptr;
  ASSERT_EQ(fsj_compare(c, &config, kinds, 3, &table), FSJ_OK);
  EXPECT_NE(std::string(table).find("ev"), std::string::npos);
  fsj_string_free(table);
  EXPECT_EQ(fsj_compare(c, &config, kinds, 0, &table), FSJ_ERR_ARGUMENT);
  fsj_collection_free(c);
}

TEST(CApi, SampleWriteAndSweep) {
  fsj_collection* c = generated(80, 6);
  fsj_collection* half = nullptr;
  ASSERT_EQ(fsj_collection_sample(c, 0.5, 3, &half), FSJ_OK);
  EXPECT_EQ(fsj_collection_size(half), 40u);
  EXPECT_EQ(fsj_collection_sample(c, 0.0, 3, &half), FSJ_ERR_ARGUMENT);

  const std::string path = temp_path("corpus.txt");
  ASSERT_EQ(fsj_collection_write(c, path.c_str(), ';'), FSJ_OK);
  fsj_collection* back = nullptr;
  ASSERT_EQ(fsj_collection_load(path.c_str(), nullptr, &back), FSJ_OK);
  EXPECT_EQ(fsj_collection_size(back), 80u);

  const fsj_matcher kinds[] = {FSJ_MATCHER_HG, FSJ_MATCHER_PS};
  const double deltas[] = {0.7};
  const double fractions[] = {0.5, 1.0};
  fsj_sweep_config sweep;
  fsj_sweep_config_init(&sweep);
  sweep.matchers = kinds;
  sweep.n_matchers = 2;
  sweep.deltas = deltas;
  sweep.n_deltas = 1;
  sweep.fractions = fractions;
  sweep.n_fractions = 2;
  sweep.repeats = 1;
  char* csv = nullptr;
  char* profile = nullptr;
  ASSERT_EQ(fsj_sweep(c, &sweep, &csv, &profile), FSJ_OK);
  EXPECT_EQ(std::string(csv).rfind("#schema=fsjoin.sweep/1", 0), 0u);
  EXPECT_EQ(std::string(profile).rfind("#schema=fsjoin.profile/1", 0), 0u);
  fsj_string_free(csv);
  fsj_string_free(profile);

  fsj_collection_free(back);
  fsj_collection_free(half);
  fsj_collection_free(c);
}

}  // namespace
