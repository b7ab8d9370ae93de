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

#include "fsjoin/verify.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <string>
#include <unordered_map>

#include "fsjoin/error.hpp"
#include "fsjoin/filtering.hpp"
#include "fsjoin/matching.hpp"

namespace fsjoin {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kSlack = 1e-9;

std::int64_t elapsed_ns(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(to - from).count();
}

enum class Scoring { Weight, UpperBound };

struct Oriented {
  const SetRecord* r;
  const SetRecord* s;
};

Oriented orient(const SetRecord& a, const SetRecord& b) {
  if (a.size() < b.size() || (a.size() == b.size() && a.id <= b.id)) return {&a, &b};
  return {&b, &a};
}

VerifyResult finish(double weight, std::size_t overlap, double residual, VerifyPath path,
                    std::size_t n_r, std::size_t n_s, double delta, VerifyStats* stats) {
  VerifyResult out;
  out.score = fuzzy_score(weight, n_r, n_s);
  out.accepted = out.score >= delta;
  out.path = path;
  out.matching_weight = residual;
  out.overlap = overlap;
  if (stats != nullptr) stats->record(path);
  return out;
}

VerifyResult run_streaming(const SetRecord& r, const SetRecord& s, DedupResult dedup, double delta,
                           double epsilon, SimilarityKind sim, Scoring scoring, VerifyStats* stats) {
  const std::size_t n_r = r.size(), n_s = s.size();
  const double theta = pair_threshold(n_r, n_s, delta);
  const std::size_t rows = dedup.r_rest.size(), cols = dedup.s_rest.size();

  StreamState state(rows, cols, epsilon);
  std::vector<double> row(cols);
  double upper = static_cast<double>(n_r);
  std::int64_t graph_ns = 0, matching_ns = 0;
  // One clock read closes each interval and opens the next.
  auto mark = Clock::now();
  for (std::size_t i = 0; i < rows; ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      row[j] = element_sim(sim, *dedup.r_rest[i], *dedup.s_rest[j]);
      best = std::max(best, row[j]);
    }
    const auto built = Clock::now();
    graph_ns += elapsed_ns(mark, built);
    for (std::size_t j = 0; j < cols; ++j) {
      state.push(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), row[j]);
    }
    mark = Clock::now();
    matching_ns += elapsed_ns(built, mark);

    upper -= 1.0 - best;
    if (theta > upper + kSlack) {
      if (stats != nullptr) {
        stats->graph_ns += graph_ns;
        stats->matching_ns += matching_ns;
      }
      return finish(upper, dedup.overlap, upper - static_cast<double>(dedup.overlap), VerifyPath::UbPruned,
                    n_r, n_s, delta, stats);
    }
  }
  const PsResult result = state.finalize();
  matching_ns += elapsed_ns(mark, Clock::now());

  if (stats != nullptr) {
    stats->graph_ns += graph_ns;
    stats->matching_ns += matching_ns;
    const std::size_t stored = state.peak_stack_size();
    ++stats->ps_finalized;
    if (stored < rows * cols) ++stats->ps_below_full;
    stats->ps_peak_stack = std::max(stats->ps_peak_stack, stored);
    stats->ps_stored_edges += stored;
    stats->ps_full_edges += rows * cols;
  }

  const auto overlap = static_cast<double>(dedup.overlap);
  if (scoring == Scoring::UpperBound) {
    const double bound = (1.0 + epsilon) * result.dual_sum;
    const double capped = std::min(overlap + bound, static_cast<double>(std::min(n_r, n_s)));
    return finish(capped, dedup.overlap, bound, VerifyPath::Matched, n_r, n_s, delta, stats);
  }
  const double weight = result.matching.total_weight;
  return finish(overlap + weight, dedup.overlap, weight, VerifyPath::Matched, n_r, n_s, delta, stats);
}

VerifyResult run_verify(const SetRecord& a, const SetRecord& b, double delta, MatcherKind kind,
                        SimilarityKind sim, double epsilon, Scoring scoring, VerifyStats* stats) {
  if (!(delta > 0.0 && delta <= 1.0)) throw ArgumentError("delta must lie in (0, 1]");
  const auto [r, s] = orient(a, b);
  const std::size_t n_r = r->size(), n_s = s->size();

  const auto t0 = Clock::now();
  DedupResult dedup = deduplicate(*r, *s);
  const auto t1 = Clock::now();
  if (stats != nullptr) stats->dedup_ns += elapsed_ns(t0, t1);

  const auto overlap = static_cast<double>(dedup.overlap);
  if (dedup.r_rest.empty()) {
    return finish(overlap, dedup.overlap, 0.0, VerifyPath::DedupOnly, n_r, n_s, delta, stats);
  }
  if (kind == MatcherKind::PazSchwartzman) {
    return run_streaming(*r, *s, std::move(dedup), delta, epsilon, sim, scoring, stats);
  }

  const double theta = pair_threshold(n_r, n_s, delta);
  const std::size_t rows = dedup.r_rest.size(), cols = dedup.s_rest.size();
  BipartiteGraph graph(rows, cols);
  double upper = static_cast<double>(n_r);
  for (std::size_t i = 0; i < rows; ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      const double w = element_sim(sim, *dedup.r_rest[i], *dedup.s_rest[j]);
      graph.set_weight(i, j, w);
      best = std::max(best, w);
    }
    upper -= 1.0 - best;
    if (theta > upper + kSlack) {
      if (stats != nullptr) stats->graph_ns += elapsed_ns(t1, Clock::now());
      return finish(upper, dedup.overlap, upper - overlap, VerifyPath::UbPruned, n_r, n_s, delta, stats);
    }
  }
  const auto t2 = Clock::now();
  if (stats != nullptr) stats->graph_ns += elapsed_ns(t1, t2);

  double credited = 0.0;
  double weight = 0.0;
  VerifyPath path = VerifyPath::Matched;
  switch (kind) {
    case MatcherKind::Hungarian:
      weight = hungarian(graph).total_weight;
      credited = overlap + weight;
      break;
    case MatcherKind::EfficientVerification: {
      const EvOutcome ev = ev_hungarian(graph, theta - overlap);
      weight = ev.value;
      credited = overlap + weight;
      if (ev.decision == EvDecision::Accept) path = VerifyPath::EarlyAccept;
      if (ev.decision == EvDecision::Reject) path = VerifyPath::EarlyReject;
      break;
    }
    case MatcherKind::Greedy:
    case MatcherKind::LocallyDominant: {
      const Matching m = kind == MatcherKind::Greedy ? greedy_matching(graph) : locally_dominant_matching(graph);
      if (scoring == Scoring::UpperBound) {
        weight = 2.0 * m.total_weight;
        credited = std::min(overlap + weight, static_cast<double>(std::min(n_r, n_s)));
      } else {
        weight = m.total_weight;
        credited = overlap + weight;
      }
      break;
    }
    case MatcherKind::PazSchwartzman:
      break;  // handled above
  }
  if (stats != nullptr) stats->matching_ns += elapsed_ns(t2, Clock::now());
  return finish(credited, dedup.overlap, weight, path, n_r, n_s, delta, stats);
}

}  // namespace

std::string_view to_string(MatcherKind kind) {
  switch (kind) {
    case MatcherKind::Hungarian: return "hg";
    case MatcherKind::EfficientVerification: return "ev";
    case MatcherKind::Greedy: return "gd";
    case MatcherKind::LocallyDominant: return "ld";
    case MatcherKind::PazSchwartzman: return "ps";
  }
  return "?";
}

MatcherKind parse_matcher(std::string_view name) {
  std::string lower(name);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (MatcherKind kind : kAllMatchers) {
    if (lower == to_string(kind)) return kind;
  }
  throw ArgumentError("unknown matcher '" + std::string(name) + "' (expected hg, ev, gd, ld or ps)");
}

bool is_approximate(MatcherKind kind) {
  return kind == MatcherKind::Greedy || kind == MatcherKind::LocallyDominant ||
         kind == MatcherKind::PazSchwartzman;
}

std::string_view to_string(VerifyPath path) {
  switch (path) {
    case VerifyPath::DedupOnly: return "dedup_only";
    case VerifyPath::UbPruned: return "ub_pruned";
    case VerifyPath::Matched: return "matched";
    case VerifyPath::EarlyAccept: return "early_accept";
    case VerifyPath::EarlyReject: return "early_reject";
  }
  return "?";
}

void VerifyStats::record(VerifyPath path) {
  switch (path) {
    case VerifyPath::DedupOnly: ++dedup_only; break;
    case VerifyPath::UbPruned: ++ub_pruned; break;
    case VerifyPath::Matched: ++matched; break;
    case VerifyPath::EarlyAccept: ++early_accept; break;
    case VerifyPath::EarlyReject: ++early_reject; break;
  }
}

VerifyStats& VerifyStats::operator+=(const VerifyStats& o) {
  dedup_ns += o.dedup_ns;
  graph_ns += o.graph_ns;
  matching_ns += o.matching_ns;
  dedup_only += o.dedup_only;
  ub_pruned += o.ub_pruned;
  matched += o.matched;
  early_accept += o.early_accept;
  early_reject += o.early_reject;
  ps_finalized += o.ps_finalized;
  ps_below_full += o.ps_below_full;
  ps_peak_stack = std::max(ps_peak_stack, o.ps_peak_stack);
  ps_stored_edges += o.ps_stored_edges;
  ps_full_edges += o.ps_full_edges;
  return *this;
}

DedupResult deduplicate(const SetRecord& r, const SetRecord& s) {
  DedupResult out;
  std::unordered_map<std::string_view, std::size_t> available;
  available.reserve(s.size());
  for (const auto& e : s.elements) ++available[e.raw];

  std::unordered_map<std::string_view, std::size_t> taken;
  for (const auto& e : r.elements) {
    auto it = available.find(e.raw);
    if (it != available.end() && it->second > 0) {
      --it->second;
      ++taken[e.raw];
      ++out.overlap;
    } else {
      out.r_rest.push_back(&e);
    }
  }
  for (const auto& e : s.elements) {
    auto it = taken.find(e.raw);
    if (it != taken.end() && it->second > 0) {
      --it->second;
    } else {
      out.s_rest.push_back(&e);
    }
  }
  return out;
}

double fuzzy_score(double weight, std::size_t size_r, std::size_t size_s) {
  const double denom = static_cast<double>(size_r + size_s) - weight;
  return denom <= 0.0 ? 1.0 : weight / denom;
}

VerifyResult verify_pair(const SetRecord& r, const SetRecord& s, double delta, MatcherKind kind,
                         SimilarityKind sim, const VerifyOptions& options, VerifyStats* stats) {
  return run_verify(r, s, delta, kind, sim, options.epsilon, Scoring::Weight, stats);
}

VerifyResult verify_pair_ps(const SetRecord& r, const SetRecord& s, double delta, double epsilon,
                            SimilarityKind sim, VerifyStats* stats) {
  return run_verify(r, s, delta, MatcherKind::PazSchwartzman, sim, epsilon, Scoring::Weight, stats);
}

VerifyResult verify_pair_ub(const SetRecord& r, const SetRecord& s, double delta, MatcherKind kind,
                            SimilarityKind sim, const VerifyOptions& options, VerifyStats* stats) {
  if (!is_approximate(kind)) throw ArgumentError("the upper-bound variant needs gd, ld or ps");
  return run_verify(r, s, delta, kind, sim, options.epsilon, Scoring::UpperBound, stats);
}

}  // namespace fsjoin
