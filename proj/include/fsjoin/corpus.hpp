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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fsjoin {

using TokenId = std::uint32_t;

/// One element of a set: the raw string and its token ids, sorted ascending
/// by the collection's global token order and free of duplicates.
struct Element {
  std::string raw;
  std::vector<TokenId> tokens;
};

struct SetRecord {
  std::int64_t id = 0;
  std::vector<Element> elements;

  std::size_t size() const { return elements.size(); }
};

struct TokenizerOptions {
  int q = 3;
  // Tokenize each whitespace-separated word on its own instead of the whole
  // element string.
  bool per_word = false;
  // Elements are whitespace-separated integer ids rather than text.
  bool pretokenized = false;
};

struct LoadOptions {
  char delimiter = ';';
  TokenizerOptions tokenizer;
};

/// A tokenized collection of sets.
///
/// Sets are stored sorted ascending by element count (ties by id). Token ids
/// are dense in 0..K-1 and numbered in global token order: ascending
/// document frequency (number of sets containing the token), ties broken by
/// first appearance. Sorting an element's ids therefore sorts it in global
/// order.
class Collection {
 public:
  Collection() = default;

  /// Builds a collection from raw element strings. `ids` must be empty or
  /// match `sets` in length; when empty, ids are the input positions.
  /// Empty element strings are dropped; sets left without elements are
  /// dropped and counted in skipped_sets().
  static Collection from_strings(const std::vector<std::vector<std::string>>& sets,
                                 const TokenizerOptions& options = {},
                                 std::vector<std::int64_t> ids = {});

  const std::vector<SetRecord>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const SetRecord& operator[](std::size_t pos) const { return sets_[pos]; }

  const TokenizerOptions& tokenizer() const { return tokenizer_; }
  int q() const { return tokenizer_.q; }

  std::size_t token_count() const { return token_strings_.size(); }
  const std::string& token_string(TokenId id) const { return token_strings_.at(id); }
  /// Returns true and writes the id if `token` is in the dictionary.
  bool find_token(std::string_view token, TokenId* id) const;

  /// Lines or sets dropped at construction because they held no elements.
  std::size_t skipped_sets() const { return skipped_; }

  /// Keeps only the sets at the given positions (any order); the token
  /// dictionary is shared unchanged so token ids stay comparable with the
  /// parent.
  Collection subset(const std::vector<std::size_t>& positions) const;

 private:
  friend Collection load_collection(const std::filesystem::path&, const LoadOptions&);

  std::vector<SetRecord> sets_;
  std::vector<std::string> token_strings_;
  std::unordered_map<std::string, TokenId> token_dict_;
  TokenizerOptions tokenizer_;
  std::size_t skipped_ = 0;
};

/// Contiguous q-grams of `word`, left to right. A word shorter than q yields
/// itself as the single token; an empty word yields nothing.
std::vector<std::string> tokenize(std::string_view word, int q);

/// Reads one set per line, elements separated by `options.delimiter`.
/// Blank lines are skipped and counted. The original line index is the id.
Collection load_collection(const std::filesystem::path& path, const LoadOptions& options = {});

/// Writes the collection in the load format, one set per line in stored
/// order.
void write_collection(std::ostream& out, const Collection& collection, char delimiter = ';');
void write_collection(const std::filesystem::path& path, const Collection& collection,
                      char delimiter = ';');

/// Uniform random subset of ceil(fraction * size) sets without replacement.
/// Deterministic for a fixed seed on every platform (mt19937_64 plus a
/// bounded rejection sampler; no std distributions).
Collection sample(const Collection& collection, double fraction, std::uint64_t seed);

struct SyntheticOptions {
  std::size_t n_sets = 100;
  std::size_t avg_elems = 5;
  std::size_t alphabet = 26;
  std::uint64_t seed = 1;
  // Fraction of sets emitted as a perturbed copy of an earlier set.
  double planted_rate = 0.3;
  // Per-element probability of a single character edit in a planted copy.
  double perturb_rate = 0.15;
  // Probability that a planted copy drops one element and adds a fresh one.
  double swap_rate = 0.2;
  std::size_t min_word_len = 4;
  std::size_t max_word_len = 10;
  // Distinct words per vocabulary; 0 picks n_sets * avg_elems / 2.
  std::size_t vocabulary = 0;
  TokenizerOptions tokenizer;
};

/// Seeded synthetic corpus with planted near-duplicate pairs.
Collection generate_synthetic(const SyntheticOptions& options);
Collection generate_synthetic(std::size_t n_sets, std::size_t avg_elems, std::size_t alphabet,
                              std::uint64_t seed);

/// Raw synthetic sets before tokenization; exposed so the generator output
/// can be written without a Collection round trip.
std::vector<std::vector<std::string>> generate_synthetic_strings(const SyntheticOptions& options);

}  // namespace fsjoin
