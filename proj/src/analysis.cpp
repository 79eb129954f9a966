#include "increval/analysis.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace increval {

ChartAnalysis analyze_chart(const IncrementalChart& chart,
                            const AnalyzeOptions& options) {
  const auto validation = validate_chart(chart);
  if (!validation.ok()) {
    throw std::invalid_argument("invalid chart '" + chart.id +
                                "': " + validation.summary());
  }

  ChartAnalysis analysis;
  analysis.id = chart.id;
  analysis.n = chart.length();
  analysis.target = derive_target(chart, options.target);

  const auto edits = detect_edits(chart);
  analysis.edits.reserve(edits.size());
  for (const auto& edit : edits) {
    analysis.edits.push_back(
        {edit, classify_edit(edit, chart, analysis.target,
                             options.distance_param)});
  }

  analysis.revision_steps = detect_revisions(chart);
  analysis.revisions.reserve(analysis.revision_steps.size());
  for (int t : analysis.revision_steps) {
    RevisionRecord record;
    record.time = t;
    for (const auto& edit_record : analysis.edits) {
      if (edit_record.edit.time == t) record.edits.push_back(edit_record);
    }
    record.profile = classify_revision(t, chart, analysis.target,
                                       options.target, record.edits);
    analysis.revisions.push_back(std::move(record));
  }

  std::vector<int> effective_steps;
  for (const auto& revision : analysis.revisions) {
    if (revision.profile.effectiveness == Effectiveness::Effective) {
      effective_steps.push_back(revision.time);
    }
  }

  analysis.table =
      build_action_table(chart, analysis.target, options.target,
                         analysis.revision_steps, effective_steps,
                         chart.recompute_log);
  analysis.metrics = compute_metrics(analysis.table);
  analysis.commit_times = final_commit_times(chart);
  analysis.naive_cost = naive_recomputation_cost(analysis.n, options.cost_model);
  if (chart.recompute_log) {
    analysis.recomputations = classify_recomputations(analysis.revision_steps,
                                                      *chart.recompute_log);
    analysis.logged_cost =
        recomputation_cost(analysis.n, *chart.recompute_log, options.cost_model);
  }
  return analysis;
}

namespace {

struct ClassCounter {
  std::vector<std::string> order;
  std::map<std::string, long long> counts;

  void add(const std::string& label) { ++counts[label]; }
  void declare(std::initializer_list<const char*> labels) {
    for (const char* label : labels) {
      order.emplace_back(label);
      counts.emplace(label, 0);
    }
  }
};

void emit(const std::string& kind, const std::string& dimension,
          const ClassCounter& counter, long long denominator,
          std::vector<DistributionReport::TypePercentage>& out) {
  for (const auto& label : counter.order) {
    const long long count = counter.counts.at(label);
    out.push_back({kind, dimension, label, count,
                   100.0 * static_cast<double>(count) /
                       static_cast<double>(denominator)});
  }
}

}  // namespace

DistributionReport compute_distributions(std::span<const ChartAnalysis> charts,
                                         int bins) {
  if (bins < 1) throw std::invalid_argument("bins must be >= 1");
  DistributionReport report;
  report.revision_position_histogram.assign(bins, 0.0);

  long long total_revisions = 0;
  std::vector<long long> bin_counts(bins, 0);
  std::vector<double> fractions;
  fractions.reserve(charts.size());
  for (const auto& chart : charts) {
    for (int t : chart.revision_steps) {
      // Position t/n lies in ((k-1)/bins, k/bins] for k = ceil(t*bins/n).
      const long long k =
          (static_cast<long long>(t) * bins + chart.n - 1) / chart.n;
      ++bin_counts[k - 1];
      ++total_revisions;
    }
    fractions.push_back(static_cast<double>(chart.revision_steps.size()) /
                        static_cast<double>(chart.n));
  }
  if (total_revisions > 0) {
    for (int b = 0; b < bins; ++b) {
      report.revision_position_histogram[b] =
          static_cast<double>(bin_counts[b]) /
          static_cast<double>(total_revisions);
    }
  }

  std::sort(fractions.begin(), fractions.end());
  const auto total_charts = static_cast<double>(fractions.size());
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    const bool last_of_value =
        i + 1 == fractions.size() || fractions[i + 1] != fractions[i];
    if (last_of_value) {
      report.revision_fraction_cdf.emplace_back(
          fractions[i], static_cast<double>(i + 1) / total_charts);
    }
  }

  long long total_edits = 0;
  ClassCounter e_convenience, e_effectiveness, e_novelty, e_recurrence,
      e_oscillation, e_company, e_connectedness, e_distance, e_definiteness,
      e_time;
  e_convenience.declare({"convenient", "inconvenient"});
  e_effectiveness.declare({"effective", "ineffective", "defective"});
  e_novelty.declare({"innovative", "repetitive"});
  e_recurrence.declare({"recurrent", "steady"});
  e_oscillation.declare({"oscillating", "stable"});
  e_company.declare({"accompanied", "isolated"});
  e_connectedness.declare({"connected", "disconnected"});
  e_distance.declare({"short", "long"});
  e_definiteness.declare({"definite", "temporary"});
  e_time.declare({"intermediate", "final"});

  ClassCounter r_convenience, r_effectiveness, r_recurrence, r_oscillation,
      r_company, r_connectedness, r_distance, r_definiteness, r_time;
  r_convenience.declare({"convenient", "inconvenient"});
  r_effectiveness.declare({"effective", "ineffective", "defective"});
  r_recurrence.declare({"recurrent", "steady"});
  r_oscillation.declare({"oscillating", "stable"});
  r_company.declare({"accompanied", "isolated"});
  r_connectedness.declare({"connected-only", "disconnected-only", "both"});
  r_distance.declare({"short-only", "long-only", "both"});
  r_definiteness.declare({"definite", "temporary"});
  r_time.declare({"intermediate", "final"});

  for (const auto& chart : charts) {
    for (const auto& record : chart.edits) {
      ++total_edits;
      const auto& p = record.profile;
      e_convenience.add(to_string(p.convenience));
      e_effectiveness.add(to_string(p.effectiveness));
      e_novelty.add(to_string(p.novelty));
      e_recurrence.add(to_string(p.recurrence));
      e_oscillation.add(to_string(p.oscillation));
      e_company.add(to_string(p.company));
      e_connectedness.add(to_string(p.connectedness));
      e_distance.add(to_string(p.distance));
      e_definiteness.add(to_string(p.definiteness));
      e_time.add(to_string(p.time));
    }
    for (const auto& revision : chart.revisions) {
      const auto& p = revision.profile;
      r_convenience.add(to_string(p.convenience));
      r_effectiveness.add(to_string(p.effectiveness));
      r_recurrence.add(to_string(p.recurrence));
      r_oscillation.add(to_string(p.oscillation));
      r_company.add(to_string(p.company));
      r_connectedness.add(to_string(p.connectedness));
      r_distance.add(to_string(p.distance));
      r_definiteness.add(to_string(p.definiteness));
      r_time.add(to_string(p.time));
    }
  }

  if (total_edits > 0) {
    emit("edit", "convenience", e_convenience, total_edits,
         report.type_percentages);
    emit("edit", "effectiveness", e_effectiveness, total_edits,
         report.type_percentages);
    emit("edit", "novelty", e_novelty, total_edits, report.type_percentages);
    emit("edit", "recurrence", e_recurrence, total_edits,
         report.type_percentages);
    emit("edit", "oscillation", e_oscillation, total_edits,
         report.type_percentages);
    emit("edit", "company", e_company, total_edits, report.type_percentages);
    emit("edit", "connectedness", e_connectedness, total_edits,
         report.type_percentages);
    emit("edit", "distance", e_distance, total_edits, report.type_percentages);
    emit("edit", "definiteness", e_definiteness, total_edits,
         report.type_percentages);
    emit("edit", "time", e_time, total_edits, report.type_percentages);
  }
  if (total_revisions > 0) {
    emit("revision", "convenience", r_convenience, total_revisions,
         report.type_percentages);
    emit("revision", "effectiveness", r_effectiveness, total_revisions,
         report.type_percentages);
    emit("revision", "recurrence", r_recurrence, total_revisions,
         report.type_percentages);
    emit("revision", "oscillation", r_oscillation, total_revisions,
         report.type_percentages);
    emit("revision", "company", r_company, total_revisions,
         report.type_percentages);
    emit("revision", "connectedness", r_connectedness, total_revisions,
         report.type_percentages);
    emit("revision", "distance", r_distance, total_revisions,
         report.type_percentages);
    emit("revision", "definiteness", r_definiteness, total_revisions,
         report.type_percentages);
    emit("revision", "time", r_time, total_revisions, report.type_percentages);
  }
  return report;
}

CorpusAnalysis analyze_corpus(std::span<const IncrementalChart> charts,
                              const AnalyzeOptions& options) {
  CorpusAnalysis corpus;
  corpus.options = options;
  corpus.sequences.reserve(charts.size());
  for (const auto& chart : charts) {
    corpus.sequences.push_back(analyze_chart(chart, options));
  }
  for (const auto& sequence : corpus.sequences) {
    corpus.table += sequence.table;
    corpus.naive_cost += sequence.naive_cost;
    if (sequence.logged_cost) {
      corpus.logged_cost =
          corpus.logged_cost.value_or(0) + *sequence.logged_cost;
    }
  }
  corpus.metrics = compute_metrics(corpus.table);
  corpus.distributions = compute_distributions(corpus.sequences, options.bins);
  return corpus;
}

}  // namespace increval
