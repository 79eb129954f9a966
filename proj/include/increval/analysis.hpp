#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "increval/chart.hpp"
#include "increval/edit_analysis.hpp"
#include "increval/metrics.hpp"
#include "increval/revision_analysis.hpp"

namespace increval {

struct AnalyzeOptions {
  TargetSpec target;
  int distance_param = 2;
  int bins = 10;
  CostModel cost_model = CostModel::Quadratic;
};

// Everything the pipeline derives from one chart.
struct ChartAnalysis {
  std::string id;
  int n = 0;
  TargetPrefixes target;
  std::vector<EditRecord> edits;
  std::vector<RevisionRecord> revisions;
  std::vector<int> revision_steps;
  std::optional<RecomputationReport> recomputations;  // iff chart had a log
  std::vector<int> commit_times;
  ActionTable table;
  MetricsReport metrics;
  long long naive_cost = 0;
  std::optional<long long> logged_cost;
};

ChartAnalysis analyze_chart(const IncrementalChart& chart,
                            const AnalyzeOptions& options);

// Corpus-level aggregation is micro: per-chart action tables are summed and
// the metrics recomputed from the sums.
struct CorpusAnalysis {
  AnalyzeOptions options;
  std::vector<ChartAnalysis> sequences;
  ActionTable table;
  MetricsReport metrics;
  DistributionReport distributions;
  long long naive_cost = 0;
  std::optional<long long> logged_cost;
};

CorpusAnalysis analyze_corpus(std::span<const IncrementalChart> charts,
                              const AnalyzeOptions& options);

DistributionReport compute_distributions(std::span<const ChartAnalysis> charts,
                                         int bins);

}  // namespace increval
