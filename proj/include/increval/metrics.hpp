#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "increval/chart.hpp"

namespace increval {

// Every time step performs exactly one action: a revision (R) or a bare
// addition (A), crossed with whether the previous prefix was correct (C) or
// incorrect (I). Effective revisions are tallied separately, as are
// recomputation steps when the chart carries a log.
struct ActionTable {
  long long revised_correct = 0;      // R and previous prefix correct
  long long revised_incorrect = 0;    // R and previous prefix incorrect
  long long added_correct = 0;        // A and previous prefix correct
  long long added_incorrect = 0;      // A and previous prefix incorrect
  long long effective_correct = 0;    // effective R on correct prefix
  long long effective_incorrect = 0;  // effective R on incorrect prefix
  long long steps = 0;                // N

  bool has_recompute_log = false;
  long long recomputations = 0;         // logged steps
  long long active_recomputations = 0;  // logged steps that are revisions

  long long revisions() const { return revised_correct + revised_incorrect; }
  long long additions() const { return added_correct + added_incorrect; }
  long long correct_prefixes() const { return revised_correct + added_correct; }
  long long incorrect_prefixes() const {
    return revised_incorrect + added_incorrect;
  }

  ActionTable& operator+=(const ActionTable& other);
};

// Each value is a fraction in [0,1]; nullopt marks an undefined ratio
// (zero denominator, or recomputation rates on charts without a log).
struct MetricsReport {
  std::optional<double> rate_revision;
  std::optional<double> rate_recomputation;
  std::optional<double> rate_active_recomputation;
  std::optional<double> r_pertinence;
  std::optional<double> r_appropriateness;
  std::optional<double> a_pertinence;
  std::optional<double> a_appropriateness;
  std::optional<double> re_pertinence;
  std::optional<double> re_appropriateness;
};

ActionTable build_action_table(const IncrementalChart& chart,
                               const TargetPrefixes& target,
                               const TargetSpec& spec,
                               std::span<const int> revision_steps,
                               std::span<const int> effective_steps,
                               const std::optional<std::set<int>>& recompute_log);

MetricsReport compute_metrics(const ActionTable& table);

struct DistributionReport {
  // Relative positions t/n of all revisions, binned over (0,1]; masses sum
  // to 1 when any revision exists, otherwise all zero.
  std::vector<double> revision_position_histogram;
  // Empirical CDF of per-sequence revision fractions: (fraction, cumulative
  // share of sequences), ascending.
  std::vector<std::pair<double, double>> revision_fraction_cdf;

  struct TypePercentage {
    std::string kind;       // "edit" or "revision"
    std::string dimension;  // e.g. "convenience"
    std::string label;      // e.g. "convenient"
    long long count = 0;
    double percent = 0.0;
  };
  std::vector<TypePercentage> type_percentages;
};

enum class CostModel { Quadratic, Linear };

// Total recomputation cost of the logged steps: t^2 per step under the
// quadratic model, t under the linear one.
long long recomputation_cost(int n, const std::set<int>& recompute_log,
                             CostModel model = CostModel::Quadratic);

// Cost of recomputing at every step 1..n.
long long naive_recomputation_cost(int n, CostModel model = CostModel::Quadratic);

}  // namespace increval
