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

#include "fsjoin/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "fsjoin/error.hpp"
#include "random.hpp"

namespace fsjoin {
namespace {

std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) words.push_back(text.substr(i, j - i));
    i = j;
  }
  return words;
}

// Distinct token strings of one element, in first-occurrence order.
std::vector<std::string> element_tokens(std::string_view raw, const TokenizerOptions& options) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  auto add = [&](std::string token) {
    if (seen.insert(token).second) out.push_back(std::move(token));
  };
  if (options.pretokenized) {
    for (std::string_view word : split_whitespace(raw)) {
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
      if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw ArgumentError("malformed pre-tokenized element: '" + std::string(raw) + "'");
      }
      add(std::to_string(value));
    }
  } else if (options.per_word) {
    for (std::string_view word : split_whitespace(raw)) {
      for (auto& gram : tokenize(word, options.q)) add(std::move(gram));
    }
  } else {
    for (auto& gram : tokenize(raw, options.q)) add(std::move(gram));
  }
  return out;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view word, int q) {
  if (q < 1) throw ArgumentError("q must be positive");
  std::vector<std::string> grams;
  if (word.empty()) return grams;
  const auto width = static_cast<std::size_t>(q);
  if (word.size() < width) {
    grams.emplace_back(word);
    return grams;
  }
  grams.reserve(word.size() - width + 1);
  for (std::size_t i = 0; i + width <= word.size(); ++i) grams.emplace_back(word.substr(i, width));
  return grams;
}

Collection Collection::from_strings(const std::vector<std::vector<std::string>>& sets,
                                    const TokenizerOptions& options,
                                    std::vector<std::int64_t> ids) {
  if (options.q < 1) throw ArgumentError("q must be positive");
  if (!ids.empty() && ids.size() != sets.size()) {
    throw ArgumentError("id list does not match the number of sets");
  }

  struct PendingSet {
    std::int64_t id;
    std::vector<std::string> raws;
    std::vector<std::vector<std::string>> grams;
  };

  Collection out;
  out.tokenizer_ = options;

  std::vector<PendingSet> pending;
  pending.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    PendingSet set{ids.empty() ? static_cast<std::int64_t>(i) : ids[i], {}, {}};
    for (const auto& raw : sets[i]) {
      if (raw.empty()) continue;
      auto grams = element_tokens(raw, options);
      if (grams.empty()) continue;
      set.raws.push_back(raw);
      set.grams.push_back(std::move(grams));
    }
    if (set.raws.empty()) {
      ++out.skipped_;
      continue;
    }
    pending.push_back(std::move(set));
  }

  // Document frequency counts each set once per token.
  struct TokenStat {
    std::size_t df = 0;
    std::size_t first_seen = 0;
  };
  std::unordered_map<std::string, TokenStat> stats;
  std::vector<std::string> first_order;
  for (const auto& set : pending) {
    std::unordered_set<std::string_view> in_set;
    for (const auto& grams : set.grams) {
      for (const auto& gram : grams) {
        if (!in_set.insert(gram).second) continue;
        auto [it, inserted] = stats.try_emplace(gram);
        if (inserted) {
          it->second.first_seen = first_order.size();
          first_order.push_back(gram);
        }
        ++it->second.df;
      }
    }
  }

  std::vector<std::size_t> order(first_order.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return stats[first_order[a]].df < stats[first_order[b]].df;
  });
  out.token_strings_.reserve(order.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const auto& token = first_order[order[rank]];
    out.token_dict_.emplace(token, static_cast<TokenId>(rank));
    out.token_strings_.push_back(token);
  }

  out.sets_.reserve(pending.size());
  for (auto& set : pending) {
    SetRecord record;
    record.id = set.id;
    record.elements.reserve(set.raws.size());
    for (std::size_t e = 0; e < set.raws.size(); ++e) {
      Element element;
      element.raw = std::move(set.raws[e]);
      element.tokens.reserve(set.grams[e].size());
      for (const auto& gram : set.grams[e]) element.tokens.push_back(out.token_dict_.at(gram));
      std::sort(element.tokens.begin(), element.tokens.end());
      record.elements.push_back(std::move(element));
    }
    out.sets_.push_back(std::move(record));
  }
  std::stable_sort(out.sets_.begin(), out.sets_.end(), [](const SetRecord& a, const SetRecord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.id < b.id;
  });
  return out;
}

bool Collection::find_token(std::string_view token, TokenId* id) const {
  auto it = token_dict_.find(std::string(token));
  if (it == token_dict_.end()) return false;
  if (id != nullptr) *id = it->second;
  return true;
}

Collection Collection::subset(const std::vector<std::size_t>& positions) const {
  Collection out;
  out.token_strings_ = token_strings_;
  out.token_dict_ = token_dict_;
  out.tokenizer_ = tokenizer_;
  out.sets_.reserve(positions.size());
  for (std::size_t pos : positions) out.sets_.push_back(sets_.at(pos));
  std::stable_sort(out.sets_.begin(), out.sets_.end(), [](const SetRecord& a, const SetRecord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.id < b.id;
  });
  return out;
}

Collection load_collection(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open input file: " + path.string());

  std::vector<std::vector<std::string>> sets;
  std::vector<std::int64_t> ids;
  std::size_t blank = 0;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    const std::int64_t id = line_no++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (split_whitespace(line).empty()) {
      ++blank;
      continue;
    }
    std::vector<std::string> elements;
    std::size_t start = 0;
    while (true) {
      const std::size_t end = line.find(options.delimiter, start);
      elements.push_back(line.substr(start, end == std::string::npos ? std::string::npos : end - start));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    sets.push_back(std::move(elements));
    ids.push_back(id);
  }
  if (in.bad()) throw IoError("read error on input file: " + path.string());

  Collection out = Collection::from_strings(sets, options.tokenizer, std::move(ids));
  out.skipped_ += blank;
  return out;
}

void write_collection(std::ostream& out, const Collection& collection, char delimiter) {
  for (const auto& set : collection.sets()) {
    for (std::size_t e = 0; e < set.elements.size(); ++e) {
      if (e > 0) out << delimiter;
      out << set.elements[e].raw;
    }
    out << '\n';
  }
}

void write_collection(const std::filesystem::path& path, const Collection& collection, char delimiter) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path.string());
  write_collection(out, collection, delimiter);
  if (!out) throw IoError("write error on output file: " + path.string());
}

Collection sample(const Collection& collection, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0) || fraction > 1.0) throw ArgumentError("sample fraction must be in (0, 1]");
  const std::size_t n = collection.size();
  // The small slack keeps e.g. 0.3 * 10 from rounding up to 4.
  auto want = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9));
  want = std::min(want, n);

  std::vector<std::size_t> positions(n);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  detail::Rng rng(seed);
  // Partial Fisher-Yates: the first `want` slots end up a uniform sample.
  for (std::size_t i = 0; i < want; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(positions[i], positions[j]);
  }
  positions.resize(want);
  return collection.subset(positions);
}

std::vector<std::vector<std::string>> generate_synthetic_strings(const SyntheticOptions& o) {
  if (o.n_sets == 0 || o.avg_elems == 0 || o.alphabet == 0) {
    throw ArgumentError("synthetic generator parameters must be positive");
  }
  static constexpr std::string_view kSymbols =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  if (o.alphabet > kSymbols.size()) {
    throw ArgumentError("alphabet size must be at most " + std::to_string(kSymbols.size()));
  }
  if (o.min_word_len == 0 || o.max_word_len < o.min_word_len) {
    throw ArgumentError("invalid word length range");
  }
  for (double p : {o.planted_rate, o.perturb_rate, o.swap_rate}) {
    if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("synthetic rates must lie in [0, 1]");
  }

  detail::Rng rng(o.seed);
  auto random_word = [&] {
    const std::size_t len = rng.between(o.min_word_len, o.max_word_len);
    std::string word(len, ' ');
    for (auto& c : word) c = kSymbols[rng.below(o.alphabet)];
    return word;
  };

  const std::size_t vocab_size =
      o.vocabulary > 0 ? o.vocabulary : std::max<std::size_t>(8, o.n_sets * o.avg_elems / 2);
  std::vector<std::string> vocabulary;
  vocabulary.reserve(vocab_size);
  for (std::size_t i = 0; i < vocab_size; ++i) vocabulary.push_back(random_word());

  // One character edit: substitute, insert or delete (delete only when the
  // word keeps at least one character).
  auto perturb = [&](std::string word) {
    const std::uint64_t op = rng.below(word.size() > 1 ? 3 : 2);
    const char c = kSymbols[rng.below(o.alphabet)];
    if (op == 0) {
      word[rng.below(word.size())] = c;
    } else if (op == 1) {
      word.insert(word.begin() + static_cast<std::ptrdiff_t>(rng.below(word.size() + 1)), c);
    } else {
      word.erase(word.begin() + static_cast<std::ptrdiff_t>(rng.below(word.size())));
    }
    return word;
  };

  const std::size_t lo = std::max<std::size_t>(1, o.avg_elems - o.avg_elems / 2);
  const std::size_t hi = o.avg_elems + o.avg_elems / 2;
  std::vector<std::vector<std::string>> sets;
  sets.reserve(o.n_sets);
  for (std::size_t i = 0; i < o.n_sets; ++i) {
    if (i > 0 && rng.chance(o.planted_rate)) {
      std::vector<std::string> copy = sets[rng.below(i)];
      for (auto& element : copy) {
        if (rng.chance(o.perturb_rate)) element = perturb(element);
      }
      if (copy.size() > 1 && rng.chance(o.swap_rate)) {
        copy.erase(copy.begin() + static_cast<std::ptrdiff_t>(rng.below(copy.size())));
        copy.push_back(vocabulary[rng.below(vocabulary.size())]);
      }
      sets.push_back(std::move(copy));
      continue;
    }
    const std::size_t size = rng.between(lo, hi);
    std::vector<std::string> set;
    set.reserve(size);
    for (std::size_t e = 0; e < size; ++e) set.push_back(vocabulary[rng.below(vocabulary.size())]);
    sets.push_back(std::move(set));
  }
  return sets;
}

Collection generate_synthetic(const SyntheticOptions& options) {
  return Collection::from_strings(generate_synthetic_strings(options), options.tokenizer);
}

Collection generate_synthetic(std::size_t n_sets, std::size_t avg_elems, std::size_t alphabet,
                              std::uint64_t seed) {
  SyntheticOptions options;
  options.n_sets = n_sets;
  options.avg_elems = avg_elems;
  options.alphabet = alphabet;
  options.seed = seed;
  return generate_synthetic(options);
}

}  // namespace fsjoin
