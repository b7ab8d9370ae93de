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

#include "fsjoin/filtering.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "fsjoin/error.hpp"

namespace fsjoin {
namespace {

// Pruning compares bounds against thresholds with this much slack so that
// rounding in the bound never discards a pair sitting exactly on theta.
constexpr double kSlack = 1e-9;

void check_delta(double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) throw ArgumentError("delta must lie in (0, 1]");
}

bool size_compatible(std::size_t size_r, std::size_t size_s, double delta) {
  return delta * static_cast<double>(size_s) <= static_cast<double>(size_r) + kSlack;
}

}  // namespace

FilterCounters& FilterCounters::operator+=(const FilterCounters& other) {
  generated += other.generated;
  pruned_utility += other.pruned_utility;
  pruned_positional += other.pruned_positional;
  pruned_joint += other.pruned_joint;
  postings_scanned += other.postings_scanned;
  early_stops += other.early_stops;
  passthrough_queries += other.passthrough_queries;
  return *this;
}

double pair_threshold(std::size_t size_r, std::size_t size_s, double delta) {
  return delta / (1.0 + delta) * static_cast<double>(size_r + size_s);
}

double generation_threshold(double delta) { return 2.0 * delta / (1.0 + delta); }

double element_utility_bound(const Element& element, std::size_t shared, SimilarityKind sim,
                             const TokenizerOptions& tokenizer) {
  const auto tokens = static_cast<double>(element.tokens.size());
  const double c = std::min(static_cast<double>(shared), tokens);
  if (sim == SimilarityKind::Jaccard) {
    // JAC(r, s) <= |tok(r) ∩ tok(s)| / |tok(r)|.
    return tokens == 0.0 ? 1.0 : c / tokens;
  }
  // NEDS: each edit destroys at most q q-gram occurrences of r, so
  // LD >= (|tok(r)| - c) / q, and LD >= |s| - |r|. Maximizing
  // 1 - LD / max(|r|, |s|) over |s| gives |r| / (|r| + (|tok(r)| - c) / q).
  // The argument needs whole-element q-grams of a string at least q long.
  const auto length = element.raw.size();
  if (tokenizer.pretokenized || tokenizer.per_word || length < static_cast<std::size_t>(tokenizer.q)) {
    return 1.0;
  }
  const auto len = static_cast<double>(length);
  return std::min(1.0, len / (len + (tokens - c) / static_cast<double>(tokenizer.q)));
}

std::span<const Posting> InvertedIndex::postings(TokenId token) const {
  if (token >= lists_.size()) return {};
  return lists_[token];
}

std::span<const Posting> InvertedIndex::postings_in_set(TokenId token, std::uint32_t set_pos) const {
  const auto list = postings(token);
  auto lo = std::lower_bound(list.begin(), list.end(), set_pos,
                             [](const Posting& p, std::uint32_t s) { return p.set_pos < s; });
  auto hi = lo;
  while (hi != list.end() && hi->set_pos == set_pos) ++hi;
  return {lo, hi};
}

InvertedIndex build_index(const Collection& collection) {
  InvertedIndex index;
  index.lists_.resize(collection.token_count());
  for (std::uint32_t s = 0; s < collection.size(); ++s) {
    const auto& set = collection[s];
    for (std::uint32_t e = 0; e < set.elements.size(); ++e) {
      const auto& tokens = set.elements[e].tokens;
      for (std::uint32_t p = 0; p < tokens.size(); ++p) {
        index.lists_[tokens[p]].push_back({s, e, p});
        ++index.posting_count_;
      }
    }
  }
  // Sets are visited in position order, so each list is already sorted.
  return index;
}

std::vector<CandidatePair> generate_candidates(const InvertedIndex& index, const Collection& collection,
                                               std::size_t r_pos, double delta, SimilarityKind sim,
                                               FilterCounters* counters) {
  check_delta(delta);
  FilterCounters local;
  const auto& query = collection[r_pos];
  const std::size_t n_r = query.size();
  const double target = generation_threshold(delta) * static_cast<double>(n_r);
  const TokenizerOptions& tokenizer = collection.tokenizer();

  // (token, element) occurrences of R in global token order.
  std::vector<std::pair<TokenId, std::uint32_t>> occurrences;
  for (std::uint32_t e = 0; e < n_r; ++e) {
    for (TokenId t : query.elements[e].tokens) occurrences.emplace_back(t, e);
  }
  std::sort(occurrences.begin(), occurrences.end());

  std::vector<std::size_t> remaining(n_r);
  double sigma = 0.0;
  for (std::size_t e = 0; e < n_r; ++e) {
    remaining[e] = query.elements[e].tokens.size();
    sigma += element_utility_bound(query.elements[e], remaining[e], sim, tokenizer);
  }

  std::vector<double> utility(collection.size(), 0.0);
  std::vector<char> seen(collection.size(), 0);
  std::vector<std::uint32_t> touched;
  bool stopped = false;

  for (std::size_t i = 0; i < occurrences.size();) {
    if (sigma < target - kSlack) {
      stopped = true;
      break;
    }
    const TokenId token = occurrences[i].first;
    std::size_t group_end = i;
    double gain = 0.0;
    while (group_end < occurrences.size() && occurrences[group_end].first == token) {
      gain += 1.0 / static_cast<double>(query.elements[occurrences[group_end].second].tokens.size());
      ++group_end;
    }

    const auto list = index.postings(token);
    auto it = std::upper_bound(list.begin(), list.end(), static_cast<std::uint32_t>(r_pos),
                               [](std::uint32_t s, const Posting& p) { return s < p.set_pos; });
    std::uint32_t last = UINT32_MAX;
    for (; it != list.end(); ++it) {
      if (!size_compatible(n_r, collection[it->set_pos].size(), delta)) break;
      ++local.postings_scanned;
      if (it->set_pos == last) continue;
      last = it->set_pos;
      if (!seen[last]) {
        seen[last] = 1;
        touched.push_back(last);
      }
      utility[last] += gain;
    }

    for (std::size_t k = i; k < group_end; ++k) {
      const auto& element = query.elements[occurrences[k].second];
      std::size_t& left = remaining[occurrences[k].second];
      const double before = element_utility_bound(element, left, sim, tokenizer);
      --left;
      sigma -= before - element_utility_bound(element, left, sim, tokenizer);
    }
    i = group_end;
  }
  if (stopped) ++local.early_stops;

  // If every token was probed and the leftover bound is still high enough
  // (only possible for NEDS), a set sharing no token could still qualify.
  const bool passthrough = !stopped && sigma >= target - kSlack;
  std::vector<CandidatePair> out;
  auto emit = [&](std::uint32_t s_pos) {
    const auto& other = collection[s_pos];
    CandidatePair pair;
    pair.r_pos = static_cast<std::uint32_t>(r_pos);
    pair.s_pos = s_pos;
    pair.r_id = query.id;
    pair.s_id = other.id;
    pair.theta_rs = pair_threshold(n_r, other.size(), delta);
    pair.utility_ub = sim == SimilarityKind::Jaccard
                          ? std::min(static_cast<double>(n_r), utility[s_pos] + std::max(sigma, 0.0))
                          : static_cast<double>(n_r);
    out.push_back(pair);
  };
  if (passthrough) {
    ++local.passthrough_queries;
    for (std::size_t s = r_pos + 1; s < collection.size(); ++s) {
      if (!size_compatible(n_r, collection[s].size(), delta)) break;
      emit(static_cast<std::uint32_t>(s));
    }
  } else {
    std::sort(touched.begin(), touched.end());
    for (std::uint32_t s : touched) emit(s);
  }
  local.generated = out.size();
  if (counters != nullptr) *counters += local;
  return out;
}

std::vector<CandidatePair> refine_candidates(const std::vector<CandidatePair>& pairs,
                                             const InvertedIndex& index, const Collection& collection,
                                             double delta, const FilterOptions& options,
                                             FilterCounters* counters) {
  check_delta(delta);
  std::vector<CandidatePair> out;
  if (pairs.empty()) return out;
  FilterCounters local;
  const TokenizerOptions& tokenizer = collection.tokenizer();
  const std::uint32_t r_pos = pairs.front().r_pos;
  const auto& query = collection[r_pos];
  const std::size_t n_r = query.size();
  const bool positional = options.use_positional && options.sim == SimilarityKind::Jaccard;

  // Marks R's tokens so S-side shared counts are a lookup.
  std::vector<char> in_query(collection.token_count(), 0);
  for (const auto& element : query.elements) {
    for (TokenId t : element.tokens) in_query[t] = 1;
  }

  std::vector<double> side_s;
  std::vector<double> positional_s;
  std::vector<char> first_hit;
  std::vector<std::uint32_t> hit_list;

  for (const auto& pair : pairs) {
    if (pair.r_pos != r_pos) throw ArgumentError("refine_candidates expects pairs of one query set");
    const auto& other = collection[pair.s_pos];
    const std::size_t n_s = other.size();
    const double limit = static_cast<double>(std::min(n_r, n_s));
    const double theta = pair_threshold(n_r, n_s, delta);

    positional_s.assign(n_s, 0.0);
    first_hit.assign(n_s, 0);

    double utility_sum = 0.0;
    double positional_sum = 0.0;
    for (const auto& element : query.elements) {
      const auto t_r = element.tokens.size();
      std::size_t shared = 0;
      double positional_best = 0.0;
      for (std::uint32_t p = 0; p < t_r; ++p) {
        const auto hits = index.postings_in_set(element.tokens[p], pair.s_pos);
        if (hits.empty()) continue;
        ++shared;
        if (!positional) continue;
        for (const auto& hit : hits) {
          if (first_hit[hit.element]) continue;
          first_hit[hit.element] = 1;
          hit_list.push_back(hit.element);
          // All common tokens of r and s sit at or after the first one in
          // both lists, and the union is at least the larger element.
          const auto t_s = other.elements[hit.element].tokens.size();
          const double bound = static_cast<double>(std::min(t_r - p, t_s - hit.position)) /
                               static_cast<double>(std::max(t_r, t_s));
          positional_best = std::max(positional_best, bound);
          positional_s[hit.element] = std::max(positional_s[hit.element], bound);
        }
      }
      for (std::uint32_t s : hit_list) first_hit[s] = 0;
      hit_list.clear();

      const double base = element_utility_bound(element, shared, options.sim, tokenizer);
      utility_sum += base;
      positional_sum += positional ? std::min(base, positional_best) : base;
    }

    double bound = std::min(limit, utility_sum);
    if (bound < theta - kSlack) {
      ++local.pruned_utility;
      continue;
    }
    if (positional) {
      bound = std::min(bound, positional_sum);
      if (bound < theta - kSlack) {
        ++local.pruned_positional;
        continue;
      }
    }
    if (options.use_joint) {
      // A matching uses at most l = min(|R|, |S|) edges, one per S element,
      // so only the l largest S-side element bounds can contribute.
      side_s.resize(n_s);
      for (std::size_t s = 0; s < n_s; ++s) {
        const auto& element = other.elements[s];
        std::size_t shared = 0;
        for (TokenId t : element.tokens) shared += in_query[t] ? 1 : 0;
        double b = element_utility_bound(element, shared, options.sim, tokenizer);
        if (positional) b = std::min(b, positional_s[s]);
        side_s[s] = b;
      }
      const auto l = static_cast<std::ptrdiff_t>(std::min(n_r, n_s));
      std::nth_element(side_s.begin(), side_s.begin() + (l - 1), side_s.end(), std::greater<>());
      const double top = std::accumulate(side_s.begin(), side_s.begin() + l, 0.0);
      bound = std::min(bound, top);
      if (bound < theta - kSlack) {
        ++local.pruned_joint;
        continue;
      }
    }

    CandidatePair kept = pair;
    kept.theta_rs = theta;
    kept.utility_ub = bound;
    out.push_back(kept);
  }
  if (counters != nullptr) *counters += local;
  return out;
}

}  // namespace fsjoin
