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

#include "fsjoin/fsjoin.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "fsjoin/bench.hpp"
#include "fsjoin/corpus.hpp"
#include "fsjoin/error.hpp"

struct fsj_collection {
  fsjoin::Collection value;
};

struct fsj_report {
  fsjoin::JoinReport value;
};

namespace {

thread_local std::string g_last_error;

fsj_status fail(fsj_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs body, mapping exceptions to status codes.
template <class Body>
fsj_status guarded(Body body) {
  try {
    body();
    return FSJ_OK;
  } catch (const fsjoin::ArgumentError& e) {
    return fail(FSJ_ERR_ARGUMENT, e.what());
  } catch (const fsjoin::IoError& e) {
    return fail(FSJ_ERR_IO, e.what());
  } catch (const fsjoin::GuaranteeViolation& e) {
    return fail(FSJ_ERR_GUARANTEE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FSJ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FSJ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FSJ_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.data(), text.size() + 1);
  return out;
}

void require(bool condition, const char* message) {
  if (!condition) throw fsjoin::ArgumentError(message);
}

fsjoin::MatcherKind to_kind(fsj_matcher m) {
  switch (m) {
    case FSJ_MATCHER_HG: return fsjoin::MatcherKind::Hungarian;
    case FSJ_MATCHER_EV: return fsjoin::MatcherKind::EfficientVerification;
    case FSJ_MATCHER_GD: return fsjoin::MatcherKind::Greedy;
    case FSJ_MATCHER_LD: return fsjoin::MatcherKind::LocallyDominant;
    case FSJ_MATCHER_PS: return fsjoin::MatcherKind::PazSchwartzman;
  }
  throw fsjoin::ArgumentError("unknown matcher value");
}

fsjoin::SimilarityKind to_sim(fsj_similarity s) {
  switch (s) {
    case FSJ_SIM_JAC: return fsjoin::SimilarityKind::Jaccard;
    case FSJ_SIM_NEDS: return fsjoin::SimilarityKind::NormalizedEdit;
  }
  throw fsjoin::ArgumentError("unknown similarity value");
}

fsjoin::TokenizerOptions to_tokenizer(const fsj_tokenizer_options* o) {
  fsjoin::TokenizerOptions t;
  if (o != nullptr) {
    t.q = o->q;
    t.per_word = o->per_word != 0;
    t.pretokenized = o->pretokenized != 0;
  }
  return t;
}

fsjoin::JoinOptions to_join_options(const fsj_join_config* c) {
  fsjoin::JoinOptions o;
  o.delta = c->delta;
  o.kind = to_kind(c->matcher);
  o.sim = to_sim(c->sim);
  o.epsilon = c->epsilon;
  o.ub_variant = c->ub_variant != 0;
  o.refine_filters = c->refine_filters != 0;
  return o;
}

}  // namespace

extern "C" {

const char* fsj_last_error(void) { return g_last_error.c_str(); }

const char* fsj_status_string(fsj_status status) {
  switch (status) {
    case FSJ_OK: return "ok";
    case FSJ_ERR_ARGUMENT: return "invalid argument";
    case FSJ_ERR_IO: return "i/o error";
    case FSJ_ERR_INTERNAL: return "internal error";
    case FSJ_ERR_GUARANTEE: return "guarantee violation";
  }
  return "unknown status";
}

const char* fsj_version(void) { return "0.1.0"; }

fsj_status fsj_parse_matcher(const char* name, fsj_matcher* out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    *out = static_cast<fsj_matcher>(fsjoin::parse_matcher(name));
  });
}

fsj_status fsj_parse_similarity(const char* name, fsj_similarity* out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    *out = fsjoin::parse_similarity(name) == fsjoin::SimilarityKind::Jaccard ? FSJ_SIM_JAC : FSJ_SIM_NEDS;
  });
}

void fsj_tokenizer_options_init(fsj_tokenizer_options* options) {
  if (options == nullptr) return;
  options->q = 3;
  options->per_word = 0;
  options->pretokenized = 0;
  options->delimiter = ';';
}

fsj_status fsj_collection_load(const char* path, const fsj_tokenizer_options* options, fsj_collection** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    fsjoin::LoadOptions lo;
    lo.tokenizer = to_tokenizer(options);
    if (options != nullptr) lo.delimiter = options->delimiter;
    *out = new fsj_collection{fsjoin::load_collection(path, lo)};
  });
}

void fsj_synthetic_options_init(fsj_synthetic_options* options) {
  if (options == nullptr) return;
  const fsjoin::SyntheticOptions d;
  options->n_sets = d.n_sets;
  options->avg_elems = d.avg_elems;
  options->alphabet = d.alphabet;
  options->seed = d.seed;
  options->planted_rate = d.planted_rate;
  options->perturb_rate = d.perturb_rate;
  options->swap_rate = d.swap_rate;
  options->min_word_len = d.min_word_len;
  options->max_word_len = d.max_word_len;
  options->vocabulary = d.vocabulary;
}

fsj_status fsj_collection_generate(const fsj_synthetic_options* options, const fsj_tokenizer_options* tokenizer,
                                   fsj_collection** out) {
  return guarded([&] {
    require(options != nullptr && out != nullptr, "null argument");
    fsjoin::SyntheticOptions so;
    so.n_sets = options->n_sets;
    so.avg_elems = options->avg_elems;
    so.alphabet = options->alphabet;
    so.seed = options->seed;
    so.planted_rate = options->planted_rate;
    so.perturb_rate = options->perturb_rate;
    so.swap_rate = options->swap_rate;
    so.min_word_len = options->min_word_len;
    so.max_word_len = options->max_word_len;
    so.vocabulary = options->vocabulary;
    so.tokenizer = to_tokenizer(tokenizer);
    *out = new fsj_collection{fsjoin::generate_synthetic(so)};
  });
}

fsj_status fsj_collection_sample(const fsj_collection* collection, double fraction, uint64_t seed,
                                 fsj_collection** out) {
  return guarded([&] {
    require(collection != nullptr && out != nullptr, "null argument");
    *out = new fsj_collection{fsjoin::sample(collection->value, fraction, seed)};
  });
}

fsj_status fsj_collection_write(const fsj_collection* collection, const char* path, char delimiter) {
  return guarded([&] {
    require(collection != nullptr && path != nullptr, "null argument");
    fsjoin::write_collection(std::filesystem::path(path), collection->value, delimiter);
  });
}

size_t fsj_collection_size(const fsj_collection* collection) {
  return collection == nullptr ? 0 : collection->value.size();
}

size_t fsj_collection_skipped(const fsj_collection* collection) {
  return collection == nullptr ? 0 : collection->value.skipped_sets();
}

void fsj_collection_free(fsj_collection* collection) { delete collection; }

void fsj_join_config_init(fsj_join_config* config) {
  if (config == nullptr) return;
  config->delta = 0.7;
  config->matcher = FSJ_MATCHER_HG;
  config->sim = FSJ_SIM_JAC;
  config->epsilon = 0.001;
  config->ub_variant = 0;
  config->refine_filters = 1;
}

fsj_status fsj_join(const fsj_collection* collection, const fsj_join_config* config, fsj_report** out) {
  return guarded([&] {
    require(collection != nullptr && config != nullptr && out != nullptr, "null argument");
    *out = new fsj_report{fsjoin::run_join(collection->value, to_join_options(config))};
  });
}

fsj_status fsj_oracle_join(const fsj_collection* collection, double delta, fsj_similarity sim, fsj_report** out) {
  return guarded([&] {
    require(collection != nullptr && out != nullptr, "null argument");
    *out = new fsj_report{fsjoin::run_oracle_join(collection->value, delta, to_sim(sim))};
  });
}

size_t fsj_report_pair_count(const fsj_report* report) {
  return report == nullptr ? 0 : report->value.pairs.size();
}

fsj_status fsj_report_pair(const fsj_report* report, size_t index, fsj_pair* out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    require(index < report->value.pairs.size(), "pair index out of range");
    const auto& p = report->value.pairs[index];
    *out = {p.r_id, p.s_id, p.score};
  });
}

fsj_status fsj_report_write_pairs(const fsj_report* report, const char* path) {
  return guarded([&] {
    require(report != nullptr && path != nullptr, "null argument");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw fsjoin::IoError(std::string("cannot open ") + path + " for writing");
    fsjoin::write_pairs_csv(file, report->value.pairs);
    if (!file) throw fsjoin::IoError(std::string("failed writing ") + path);
  });
}

fsj_status fsj_report_json(const fsj_report* report, char** out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    *out = copy_string(fsjoin::report_json(report->value));
  });
}

int64_t fsj_report_matching_ns(const fsj_report* report) {
  return report == nullptr ? 0 : report->value.timings.matching_ns;
}

void fsj_report_free(fsj_report* report) { delete report; }

fsj_status fsj_compare(const fsj_collection* collection, const fsj_join_config* config,
                       const fsj_matcher* matchers, size_t n_matchers, char** table) {
  return guarded([&] {
    require(collection != nullptr && config != nullptr && table != nullptr, "null argument");
    require(matchers != nullptr && n_matchers > 0, "compare needs at least one matcher");
    std::vector<fsjoin::MatcherKind> kinds;
    for (size_t i = 0; i < n_matchers; ++i) kinds.push_back(to_kind(matchers[i]));
    const auto rows = fsjoin::run_compare(collection->value, config->delta, to_sim(config->sim), kinds,
                                          config->ub_variant != 0, config->epsilon, config->refine_filters != 0);
    std::ostringstream text;
    fsjoin::write_compare_table(text, rows);
    *table = copy_string(text.str());
  });
}

void fsj_sweep_config_init(fsj_sweep_config* config) {
  if (config == nullptr) return;
  config->sim = FSJ_SIM_JAC;
  config->matchers = nullptr;
  config->n_matchers = 0;
  config->deltas = nullptr;
  config->n_deltas = 0;
  config->fractions = nullptr;
  config->n_fractions = 0;
  config->seed = 42;
  config->repeats = 3;
  config->epsilon = 0.001;
  config->ub_variant = 0;
  config->refine_filters = 1;
}

fsj_status fsj_sweep(const fsj_collection* collection, const fsj_sweep_config* config, char** csv,
                     char** profile_csv) {
  return guarded([&] {
    require(collection != nullptr && config != nullptr && csv != nullptr, "null argument");
    require(config->matchers != nullptr && config->n_matchers > 0, "sweep needs at least one matcher");
    require(config->deltas != nullptr && config->n_deltas > 0, "sweep needs at least one delta");
    require(config->fractions != nullptr && config->n_fractions > 0, "sweep needs at least one fraction");
    fsjoin::SweepOptions so;
    so.sim = to_sim(config->sim);
    so.kinds.clear();
    for (size_t i = 0; i < config->n_matchers; ++i) so.kinds.push_back(to_kind(config->matchers[i]));
    so.deltas.assign(config->deltas, config->deltas + config->n_deltas);
    so.fractions.assign(config->fractions, config->fractions + config->n_fractions);
    so.seed = config->seed;
    so.repeats = config->repeats;
    so.epsilon = config->epsilon;
    so.ub_variant = config->ub_variant != 0;
    so.refine_filters = config->refine_filters != 0;

    const auto rows = fsjoin::run_sweep(collection->value, so);
    std::ostringstream table;
    fsjoin::write_sweep_csv(table, rows);
    std::string profile_text;
    if (profile_csv != nullptr) {
      std::ostringstream profile;
      fsjoin::write_profile_csv(profile, fsjoin::profile_from_sweep(rows));
      profile_text = profile.str();
    }
    char* first = copy_string(table.str());
    if (profile_csv != nullptr) {
      try {
        *profile_csv = copy_string(profile_text);
      } catch (...) {
        std::free(first);
        throw;
      }
    }
    *csv = first;
  });
}

void fsj_string_free(char* text) { std::free(text); }

}  // extern "C"
