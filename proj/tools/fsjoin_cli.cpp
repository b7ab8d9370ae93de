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

// Command-line driver. Talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fsjoin/fsjoin.h"

namespace {

enum ExitCode { kOk = 0, kIoError = 1, kUsage = 2, kGuarantee = 3, kInternal = 4 };

// Thrown out of subcommand handlers once the message has been printed.
struct Exit {
  int code;
};

int exit_code(fsj_status status) {
  switch (status) {
    case FSJ_OK: return kOk;
    case FSJ_ERR_ARGUMENT: return kUsage;
    case FSJ_ERR_IO: return kIoError;
    case FSJ_ERR_GUARANTEE: return kGuarantee;
    case FSJ_ERR_INTERNAL: return kInternal;
  }
  return kInternal;
}

void check(fsj_status status) {
  if (status == FSJ_OK) return;
  std::cerr << "fsjoin: " << fsj_status_string(status) << ": " << fsj_last_error() << "\n";
  throw Exit{exit_code(status)};
}

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << "fsjoin: " << message << "\n";
  throw Exit{kUsage};
}

struct CollectionDeleter {
  void operator()(fsj_collection* c) const { fsj_collection_free(c); }
};
struct ReportDeleter {
  void operator()(fsj_report* r) const { fsj_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { fsj_string_free(s); }
};
using CollectionPtr = std::unique_ptr<fsj_collection, CollectionDeleter>;
using ReportPtr = std::unique_ptr<fsj_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct InputFlags {
  std::string input;
  int q = 3;
  bool per_word = false;
  bool pretokenized = false;
  std::string delimiter = ";";
  double sample = 1.0;
  std::uint64_t seed = 42;
};

struct JoinFlags {
  double delta = 0.7;
  std::string matcher = "hg";
  std::string sim = "jac";
  double epsilon = 0.001;
  bool ub_variant = false;
  std::string filters = "pj";
};

struct OutputFlags {
  std::string output = "-";
  std::string format = "csv";
  std::string report;
};

void add_input(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("--input,-i", f.input, "corpus file, one set per line")->required();
  cmd->add_option("--q", f.q, "q-gram length")->capture_default_str()->check(CLI::Range(1, 64));
  cmd->add_flag("--per-word", f.per_word, "tokenize each word of an element separately");
  cmd->add_flag("--pretokenized", f.pretokenized, "elements are whitespace-separated integer ids");
  cmd->add_option("--delimiter", f.delimiter, "element separator")->capture_default_str();
  cmd->add_option("--sample", f.sample, "run on a uniform sample of this fraction of the sets")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--seed", f.seed, "sampling seed")->capture_default_str();
}

void add_join(CLI::App* cmd, JoinFlags& f, bool with_matcher) {
  cmd->add_option("--delta,-d", f.delta, "similarity threshold in (0, 1]")->capture_default_str();
  if (with_matcher) {
    cmd->add_option("--matcher,-m", f.matcher, "hg, ev, gd, ld or ps")->capture_default_str();
  }
  cmd->add_option("--sim", f.sim, "element similarity: jac or neds")->capture_default_str();
  cmd->add_option("--epsilon", f.epsilon, "ps epsilon")->capture_default_str()->check(CLI::NonNegativeNumber);
  cmd->add_flag("--ub-variant", f.ub_variant, "score gd, ld and ps with their upper bound");
  cmd->add_option("--filters", f.filters, "pj (positional + joint) or none")
      ->capture_default_str()
      ->check(CLI::IsMember({"pj", "none"}));
}

void add_output(CLI::App* cmd, OutputFlags& f, bool with_format) {
  cmd->add_option("--output,-o", f.output, "output path, - for stdout")->capture_default_str();
  if (with_format) {
    cmd->add_option("--format", f.format, "csv (pairs) or json (full report)")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--report", f.report, "also write the json report here");
  }
}

fsj_tokenizer_options tokenizer(const InputFlags& f) {
  fsj_tokenizer_options t;
  fsj_tokenizer_options_init(&t);
  t.q = f.q;
  t.per_word = f.per_word ? 1 : 0;
  t.pretokenized = f.pretokenized ? 1 : 0;
  if (f.delimiter.size() != 1) usage_error("--delimiter must be a single character");
  t.delimiter = f.delimiter[0];
  return t;
}

CollectionPtr load(const InputFlags& f) {
  const fsj_tokenizer_options t = tokenizer(f);
  fsj_collection* raw = nullptr;
  check(fsj_collection_load(f.input.c_str(), &t, &raw));
  CollectionPtr coll(raw);
  if (fsj_collection_skipped(raw) > 0) {
    std::cerr << "fsjoin: skipped " << fsj_collection_skipped(raw) << " empty line(s)\n";
  }
  if (f.sample < 1.0) {
    fsj_collection* sampled = nullptr;
    check(fsj_collection_sample(raw, f.sample, f.seed, &sampled));
    coll.reset(sampled);
  }
  return coll;
}

std::vector<fsj_matcher> parse_matchers(const std::string& list) {
  std::vector<fsj_matcher> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string name = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!name.empty()) {
      fsj_matcher m;
      check(fsj_parse_matcher(name.c_str(), &m));
      out.push_back(m);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) usage_error("no matcher given");
  return out;
}

fsj_join_config join_config(const JoinFlags& f) {
  fsj_join_config c;
  fsj_join_config_init(&c);
  c.delta = f.delta;
  check(fsj_parse_matcher(f.matcher.c_str(), &c.matcher));
  check(fsj_parse_similarity(f.sim.c_str(), &c.sim));
  c.epsilon = f.epsilon;
  c.ub_variant = f.ub_variant ? 1 : 0;
  c.refine_filters = f.filters == "pj" ? 1 : 0;
  return c;
}

void write_text(const std::string& path, const char* text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "fsjoin: cannot open " << path << " for writing\n";
    throw Exit{kIoError};
  }
  out << text;
  if (!out) {
    std::cerr << "fsjoin: failed writing " << path << "\n";
    throw Exit{kIoError};
  }
}

std::string pairs_csv(const fsj_report* report) {
  std::string text = "r_id,s_id,score\n";
  char buf[96];
  const std::size_t n = fsj_report_pair_count(report);
  for (std::size_t i = 0; i < n; ++i) {
    fsj_pair p;
    check(fsj_report_pair(report, i, &p));
    std::snprintf(buf, sizeof buf, "%lld,%lld,%.12f\n", static_cast<long long>(p.r_id),
                  static_cast<long long>(p.s_id), p.score);
    text += buf;
  }
  return text;
}

void emit_report(const fsj_report* report, const OutputFlags& out) {
  if (out.format == "json") {
    char* json = nullptr;
    check(fsj_report_json(report, &json));
    StringPtr hold(json);
    write_text(out.output, json);
  } else if (out.output == "-") {
    write_text(out.output, pairs_csv(report).c_str());
  } else {
    check(fsj_report_write_pairs(report, out.output.c_str()));
  }
  if (!out.report.empty()) {
    char* json = nullptr;
    check(fsj_report_json(report, &json));
    StringPtr hold(json);
    write_text(out.report, json);
  }
}

std::vector<double> parse_reals(const std::string& list, const char* flag) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start < list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string::npos) comma = list.size();
    const std::string item = list.substr(start, comma - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      usage_error(std::string("bad number '") + item + "' in " + flag);
    }
    start = comma + 1;
  }
  if (out.empty()) usage_error(std::string(flag) + " needs at least one value");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy set similarity join"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fsj_version()));

  InputFlags join_in, cmp_in, sweep_in, oracle_in;
  JoinFlags join_f, cmp_f, sweep_f, oracle_f;
  OutputFlags join_out, cmp_out, sweep_out, oracle_out;

  auto* join = app.add_subcommand("join", "filter-verify self-join");
  add_input(join, join_in);
  add_join(join, join_f, true);
  add_output(join, join_out, true);

  auto* compare = app.add_subcommand("compare", "accuracy of matchers against the exact join");
  std::string cmp_matchers = "hg,ev,gd,ld,ps";
  add_input(compare, cmp_in);
  add_join(compare, cmp_f, false);
  compare->add_option("--matcher,-m", cmp_matchers, "comma-separated matchers")->capture_default_str();
  add_output(compare, cmp_out, false);

  auto* sweep = app.add_subcommand("sweep", "timing sweep over thresholds and sample sizes");
  std::string sweep_matchers = "hg,ev,gd,ld,ps";
  std::string deltas = "0.7", fractions = "0.2,0.4,0.6,0.8,1.0";
  std::size_t repeats = 3;
  std::string profile_path;
  add_input(sweep, sweep_in);
  add_join(sweep, sweep_f, false);
  sweep->add_option("--matcher,-m", sweep_matchers, "comma-separated matchers")->capture_default_str();
  sweep->add_option("--deltas", deltas, "comma-separated thresholds")->capture_default_str();
  sweep->add_option("--fractions", fractions, "comma-separated sample fractions")->capture_default_str();
  sweep->add_option("--repeats", repeats, "runs per cell; the median is reported")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--profile", profile_path, "write the performance profile csv here");
  add_output(sweep, sweep_out, false);

  auto* generate = app.add_subcommand("generate", "write a synthetic corpus");
  fsj_synthetic_options gen;
  fsj_synthetic_options_init(&gen);
  std::string gen_output;
  generate->add_option("--sets", gen.n_sets, "number of sets")->capture_default_str();
  generate->add_option("--avg-elems", gen.avg_elems, "mean elements per set")->capture_default_str();
  generate->add_option("--alphabet", gen.alphabet, "letters used in words")->capture_default_str();
  generate->add_option("--seed", gen.seed, "generator seed")->capture_default_str();
  generate->add_option("--planted", gen.planted_rate, "fraction of near-duplicate copies")->capture_default_str();
  generate->add_option("--perturb", gen.perturb_rate, "per-element edit probability in a copy")
      ->capture_default_str();
  generate->add_option("--swap", gen.swap_rate, "probability a copy swaps one element")->capture_default_str();
  generate->add_option("--min-word", gen.min_word_len, "shortest word")->capture_default_str();
  generate->add_option("--max-word", gen.max_word_len, "longest word")->capture_default_str();
  generate->add_option("--vocabulary", gen.vocabulary, "distinct words, 0 for automatic")->capture_default_str();
  generate->add_option("--output,-o", gen_output, "output path")->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force exact join over all pairs");
  add_input(oracle, oracle_in);
  add_join(oracle, oracle_f, false);
  add_output(oracle, oracle_out, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "fsjoin: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*join) {
      const fsj_join_config config = join_config(join_f);
      CollectionPtr coll = load(join_in);
      fsj_report* raw = nullptr;
      check(fsj_join(coll.get(), &config, &raw));
      ReportPtr report(raw);
      emit_report(report.get(), join_out);
    } else if (*compare) {
      const fsj_join_config config = join_config(cmp_f);
      const auto kinds = parse_matchers(cmp_matchers);
      CollectionPtr coll = load(cmp_in);
      char* table = nullptr;
      check(fsj_compare(coll.get(), &config, kinds.data(), kinds.size(), &table));
      StringPtr hold(table);
      write_text(cmp_out.output, table);
    } else if (*sweep) {
      const fsj_join_config base = join_config(sweep_f);
      const auto kinds = parse_matchers(sweep_matchers);
      const auto ds = parse_reals(deltas, "--deltas");
      const auto fs = parse_reals(fractions, "--fractions");
      CollectionPtr coll = load(sweep_in);
      fsj_sweep_config config;
      fsj_sweep_config_init(&config);
      config.sim = base.sim;
      config.matchers = kinds.data();
      config.n_matchers = kinds.size();
      config.deltas = ds.data();
      config.n_deltas = ds.size();
      config.fractions = fs.data();
      config.n_fractions = fs.size();
      config.seed = sweep_in.seed;
      config.repeats = repeats;
      config.epsilon = base.epsilon;
      config.ub_variant = base.ub_variant;
      config.refine_filters = base.refine_filters;
      char* csv = nullptr;
      char* profile = nullptr;
      check(fsj_sweep(coll.get(), &config, &csv, profile_path.empty() ? nullptr : &profile));
      StringPtr hold_csv(csv), hold_profile(profile);
      write_text(sweep_out.output, csv);
      if (!profile_path.empty()) write_text(profile_path, profile);
    } else if (*generate) {
      fsj_collection* raw = nullptr;
      check(fsj_collection_generate(&gen, nullptr, &raw));
      CollectionPtr coll(raw);
      check(fsj_collection_write(coll.get(), gen_output.c_str(), ';'));
    } else if (*oracle) {
      fsj_similarity sim;
      check(fsj_parse_similarity(oracle_f.sim.c_str(), &sim));
      CollectionPtr coll = load(oracle_in);
      fsj_report* raw = nullptr;
      check(fsj_oracle_join(coll.get(), oracle_f.delta, sim, &raw));
      ReportPtr report(raw);
      emit_report(report.get(), oracle_out);
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kOk;
}
