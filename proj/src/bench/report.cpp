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

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fsjoin/bench.hpp"
#include "fsjoin/error.hpp"

namespace fsjoin {
namespace {

double ms(std::int64_t ns) { return static_cast<double>(ns) / 1e6; }

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
}

JoinOptions options_for(MatcherKind kind, double delta, SimilarityKind sim, double epsilon, bool ub_variant,
                        bool refine_filters) {
  JoinOptions o;
  o.delta = delta;
  o.kind = kind;
  o.sim = sim;
  o.epsilon = epsilon;
  o.ub_variant = ub_variant && is_approximate(kind);
  o.refine_filters = refine_filters;
  return o;
}

void check_guarantees(MatcherKind kind, bool ub_variant, const AccuracyReport& acc) {
  const std::string name(to_string(kind));
  if (kind == MatcherKind::EfficientVerification && (acc.fp != 0 || acc.fn != 0)) {
    throw GuaranteeViolation("ev result differs from the hungarian result");
  }
  if (!is_approximate(kind)) return;
  if (ub_variant && acc.fn != 0) {
    throw GuaranteeViolation(name + " upper-bound join missed " + std::to_string(acc.fn) + " exact pairs");
  }
  if (!ub_variant && acc.fp != 0) {
    throw GuaranteeViolation(name + " join reported " + std::to_string(acc.fp) + " pairs outside the exact result");
  }
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(precision) << v;
  return s.str();
}

}  // namespace

AccuracyReport accuracy(const std::vector<ResultPair>& approx, const std::vector<ResultPair>& exact) {
  std::set<std::pair<std::int64_t, std::int64_t>> truth;
  for (const auto& p : exact) truth.emplace(p.r_id, p.s_id);
  std::set<std::pair<std::int64_t, std::int64_t>> found;
  for (const auto& p : approx) found.emplace(p.r_id, p.s_id);

  AccuracyReport acc;
  for (const auto& key : found) {
    if (truth.count(key)) ++acc.tp; else ++acc.fp;
  }
  acc.fn = truth.size() - acc.tp;
  acc.recall = ratio(acc.tp, acc.tp + acc.fn);
  acc.precision = ratio(acc.tp, acc.tp + acc.fp);
  acc.delta_sets = static_cast<std::int64_t>(found.size()) - static_cast<std::int64_t>(truth.size());
  return acc;
}

std::vector<CompareRow> run_compare(const Collection& collection, double delta, SimilarityKind sim,
                                    const std::vector<MatcherKind>& kinds, bool ub_variant, double epsilon,
                                    bool refine_filters) {
  if (kinds.empty()) throw ArgumentError("compare needs at least one matcher");
  const JoinReport truth =
      run_join(collection, options_for(MatcherKind::Hungarian, delta, sim, epsilon, false, refine_filters));

  std::vector<CompareRow> rows;
  for (MatcherKind kind : kinds) {
    CompareRow row;
    row.kind = kind;
    row.report = kind == MatcherKind::Hungarian
                     ? truth
                     : run_join(collection, options_for(kind, delta, sim, epsilon, ub_variant, refine_filters));
    row.accuracy = accuracy(row.report.pairs, truth.pairs);
    check_guarantees(kind, row.report.options.ub_variant, row.accuracy);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_compare_table(std::ostream& out, const std::vector<CompareRow>& rows) {
  out << std::left << std::setw(8) << "matcher" << std::right << std::setw(8) << "mode" << std::setw(9) << "pairs"
      << std::setw(11) << "delta_sets" << std::setw(8) << "tp" << std::setw(8) << "fp" << std::setw(8) << "fn"
      << std::setw(10) << "recall" << std::setw(11) << "precision" << std::setw(14) << "verify_ms"
      << std::setw(14) << "matching_ms" << std::setw(14) << "total_ms" << '\n';
  for (const auto& row : rows) {
    const auto& t = row.report.timings;
    out << std::left << std::setw(8) << to_string(row.kind) << std::right << std::setw(8)
        << (row.report.options.ub_variant ? "ub" : "weight") << std::setw(9) << row.report.pairs.size()
        << std::setw(11) << row.accuracy.delta_sets << std::setw(8) << row.accuracy.tp << std::setw(8)
        << row.accuracy.fp << std::setw(8) << row.accuracy.fn << std::setw(10) << fmt(row.accuracy.recall, 4)
        << std::setw(11) << fmt(row.accuracy.precision, 4) << std::setw(14) << fmt(ms(t.verification_ns()), 3)
        << std::setw(14) << fmt(ms(t.matching_ns), 3) << std::setw(14) << fmt(ms(t.total_ns()), 3) << '\n';
  }
}

std::vector<SweepRow> run_sweep(const Collection& collection, const SweepOptions& options) {
  if (options.kinds.empty() || options.deltas.empty() || options.fractions.empty()) {
    throw ArgumentError("sweep lists must not be empty");
  }
  if (options.repeats == 0) throw ArgumentError("repeats must be at least 1");
  for (double f : options.fractions) {
    if (!(f > 0.0 && f <= 1.0)) throw ArgumentError("fractions must lie in (0, 1]");
  }

  std::vector<SweepRow> rows;
  for (std::size_t fi = 0; fi < options.fractions.size(); ++fi) {
    const double fraction = options.fractions[fi];
    const Collection part = sample(collection, fraction, options.seed + fi);
    for (double delta : options.deltas) {
      const JoinReport truth = run_join(
          part, options_for(MatcherKind::Hungarian, delta, options.sim, options.epsilon, false, options.refine_filters));
      for (MatcherKind kind : options.kinds) {
        const JoinOptions jo =
            options_for(kind, delta, options.sim, options.epsilon, options.ub_variant, options.refine_filters);
        std::vector<JoinReport> runs;
        for (std::size_t k = 0; k < options.repeats; ++k) runs.push_back(run_join(part, jo));
        std::sort(runs.begin(), runs.end(), [](const JoinReport& a, const JoinReport& b) {
          return a.timings.total_ns() < b.timings.total_ns();
        });
        const JoinReport& median = runs[runs.size() / 2];

        SweepRow row;
        row.delta = delta;
        row.fraction = fraction;
        row.kind = kind;
        row.n_sets = part.size();
        row.candidates = median.filter.generated;
        row.pruned = median.filter.pruned();
        row.verified = median.verify.verified();
        row.pairs = median.pairs.size();
        row.timings = median.timings;
        row.accuracy = accuracy(median.pairs, truth.pairs);
        row.repeats = options.repeats;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "#schema=" << kSweepSchema << '\n';
  out << "delta,fraction,matcher,n_sets,candidates,pruned,verified,pairs,init_ms,candidate_gen_ms,"
         "refinement_ms,dedup_ms,graph_build_ms,matching_ms,verification_ms,total_ms,tp,fp,fn,recall,"
         "precision,delta_sets,repeats\n";
  for (const auto& r : rows) {
    const auto& t = r.timings;
    out << fmt(r.delta, 4) << ',' << fmt(r.fraction, 4) << ',' << to_string(r.kind) << ',' << r.n_sets << ','
        << r.candidates << ',' << r.pruned << ',' << r.verified << ',' << r.pairs << ',' << fmt(ms(t.init_ns))
        << ',' << fmt(ms(t.candidate_gen_ns)) << ',' << fmt(ms(t.refinement_ns)) << ',' << fmt(ms(t.dedup_ns))
        << ',' << fmt(ms(t.graph_build_ns)) << ',' << fmt(ms(t.matching_ns)) << ','
        << fmt(ms(t.verification_ns())) << ',' << fmt(ms(t.total_ns())) << ',' << r.accuracy.tp << ','
        << r.accuracy.fp << ',' << r.accuracy.fn << ',' << fmt(r.accuracy.recall) << ','
        << fmt(r.accuracy.precision) << ',' << r.accuracy.delta_sets << ',' << r.repeats << '\n';
  }
}

PerformanceProfile performance_profile(const std::vector<std::string>& kinds,
                                       const std::vector<std::vector<double>>& times) {
  if (kinds.empty()) throw ArgumentError("profile needs at least one kind");
  for (const auto& row : times) {
    if (row.size() != kinds.size()) throw ArgumentError("every instance needs one time per kind");
  }
  PerformanceProfile profile;
  const std::size_t n = times.size();
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    std::vector<double> offsets;
    double sum = 0.0, log_sum = 0.0;
    for (const auto& row : times) {
      const double best = *std::min_element(row.begin(), row.end());
      offsets.push_back(row[k] - best);
      sum += row[k];
      // Zero times would send the geometric mean to zero.
      log_sum += std::log(std::max(row[k], 1e-12));
    }
    std::sort(offsets.begin(), offsets.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (i + 1 < n && offsets[i + 1] == offsets[i]) continue;
      profile.points.push_back({kinds[k], offsets[i], static_cast<double>(i + 1) / static_cast<double>(n)});
    }
    ProfileSummary summary;
    summary.kind = kinds[k];
    if (n > 0) {
      summary.arithmetic_mean = sum / static_cast<double>(n);
      summary.geometric_mean = std::exp(log_sum / static_cast<double>(n));
    }
    profile.summaries.push_back(summary);
  }
  return profile;
}

PerformanceProfile profile_from_sweep(const std::vector<SweepRow>& rows) {
  std::vector<std::string> kinds;
  std::map<std::pair<double, double>, std::map<std::string, double>> cells;
  for (const auto& r : rows) {
    const std::string name(to_string(r.kind));
    if (std::find(kinds.begin(), kinds.end(), name) == kinds.end()) kinds.push_back(name);
    cells[{r.delta, r.fraction}][name] = ms(r.timings.total_ns());
  }
  std::vector<std::vector<double>> times;
  for (const auto& [instance, by_kind] : cells) {
    if (by_kind.size() != kinds.size()) continue;
    std::vector<double> row;
    for (const auto& k : kinds) row.push_back(by_kind.at(k));
    times.push_back(std::move(row));
  }
  return performance_profile(kinds, times);
}

void write_profile_csv(std::ostream& out, const PerformanceProfile& profile) {
  out << "#schema=" << kProfileSchema << '\n';
  out << "record,matcher,x,y\n";
  for (const auto& p : profile.points) {
    out << "point," << p.kind << ',' << fmt(p.offset) << ',' << fmt(p.fraction) << '\n';
  }
  for (const auto& s : profile.summaries) {
    out << "arithmetic_mean_ms," << s.kind << ',' << fmt(s.arithmetic_mean) << ",\n";
    out << "geometric_mean_ms," << s.kind << ',' << fmt(s.geometric_mean) << ",\n";
  }
}

void write_pairs_csv(std::ostream& out, const std::vector<ResultPair>& pairs) {
  out << "r_id,s_id,score\n";
  for (const auto& p : pairs) out << p.r_id << ',' << p.s_id << ',' << fmt(p.score, 12) << '\n';
}

std::string report_json(const JoinReport& report, int indent) {
  using nlohmann::json;
  const auto& o = report.options;
  const auto& t = report.timings;
  const auto& f = report.filter;
  const auto& v = report.verify;

  json pairs = json::array();
  for (const auto& p : report.pairs) pairs.push_back({p.r_id, p.s_id, p.score});

  json doc = {
      {"schema", "fsjoin.report/1"},
      {"config",
       {{"delta", o.delta},
        {"matcher", std::string(to_string(o.kind))},
        {"sim", std::string(to_string(o.sim))},
        {"epsilon", o.epsilon},
        {"ub_variant", o.ub_variant},
        {"filters", o.refine_filters ? "pj" : "none"}}},
      {"n_sets", report.n_sets},
      {"pair_count", report.pairs.size()},
      {"timings_ms",
       {{"init", ms(t.init_ns)},
        {"candidate_gen", ms(t.candidate_gen_ns)},
        {"refinement", ms(t.refinement_ns)},
        {"dedup", ms(t.dedup_ns)},
        {"graph_build", ms(t.graph_build_ns)},
        {"matching", ms(t.matching_ns)},
        {"verification", ms(t.verification_ns())},
        {"total", ms(t.total_ns())}}},
      {"filter",
       {{"generated", f.generated},
        {"pruned_utility", f.pruned_utility},
        {"pruned_positional", f.pruned_positional},
        {"pruned_joint", f.pruned_joint},
        {"postings_scanned", f.postings_scanned},
        {"early_stops", f.early_stops},
        {"passthrough_queries", f.passthrough_queries}}},
      {"verify",
       {{"verified", v.verified()},
        {"dedup_only", v.dedup_only},
        {"ub_pruned", v.ub_pruned},
        {"matched", v.matched},
        {"early_accept", v.early_accept},
        {"early_reject", v.early_reject},
        {"ps_finalized", v.ps_finalized},
        {"ps_below_full", v.ps_below_full},
        {"ps_peak_stack", v.ps_peak_stack},
        {"ps_stored_edges", v.ps_stored_edges},
        {"ps_full_edges", v.ps_full_edges}}},
      {"pairs", pairs},
  };
  return doc.dump(indent);
}

}  // namespace fsjoin
