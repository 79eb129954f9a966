#include "increval/metrics.hpp"

#include <algorithm>

namespace increval {

ActionTable& ActionTable::operator+=(const ActionTable& other) {
  revised_correct += other.revised_correct;
  revised_incorrect += other.revised_incorrect;
  added_correct += other.added_correct;
  added_incorrect += other.added_incorrect;
  effective_correct += other.effective_correct;
  effective_incorrect += other.effective_incorrect;
  steps += other.steps;
  has_recompute_log = has_recompute_log || other.has_recompute_log;
  recomputations += other.recomputations;
  active_recomputations += other.active_recomputations;
  return *this;
}

ActionTable build_action_table(const IncrementalChart& chart,
                               const TargetPrefixes& target,
                               const TargetSpec& spec,
                               std::span<const int> revision_steps,
                               std::span<const int> effective_steps,
                               const std::optional<std::set<int>>& recompute_log) {
  const int n = chart.length();
  if (static_cast<int>(target.prefixes.size()) != n) {
    throw std::invalid_argument("target/chart length mismatch");
  }
  const std::set<int> revised(revision_steps.begin(), revision_steps.end());
  const std::set<int> effective(effective_steps.begin(), effective_steps.end());

  ActionTable table;
  table.steps = n;
  for (int t = 1; t <= n; ++t) {
    // The condition is the state of the prefix the action acted upon; the
    // empty prefix before the first step counts as correct.
    bool correct;
    if (t == 1) {
      correct = true;
    } else {
      correct = prefix_correctness(chart.prefixes[t - 2], target.row(t - 1),
                                   spec)
                    .is_correct;
    }
    if (revised.count(t) > 0) {
      (correct ? table.revised_correct : table.revised_incorrect) += 1;
      if (effective.count(t) > 0) {
        (correct ? table.effective_correct : table.effective_incorrect) += 1;
      }
    } else {
      (correct ? table.added_correct : table.added_incorrect) += 1;
    }
  }

  if (recompute_log) {
    table.has_recompute_log = true;
    table.recomputations = static_cast<long long>(recompute_log->size());
    for (int t : *recompute_log) {
      if (revised.count(t) > 0) ++table.active_recomputations;
    }
  }
  return table;
}

namespace {

std::optional<double> ratio(long long numerator, long long denominator) {
  if (denominator == 0) return std::nullopt;
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

}  // namespace

MetricsReport compute_metrics(const ActionTable& table) {
  MetricsReport report;
  report.rate_revision = ratio(table.revisions(), table.steps);
  if (table.has_recompute_log) {
    report.rate_recomputation = ratio(table.recomputations, table.steps);
    report.rate_active_recomputation =
        ratio(table.active_recomputations, table.recomputations);
  }
  report.r_pertinence = ratio(table.revised_incorrect, table.revisions());
  report.r_appropriateness =
      ratio(table.revised_incorrect, table.incorrect_prefixes());
  report.a_pertinence = ratio(table.added_correct, table.additions());
  report.a_appropriateness =
      ratio(table.added_correct, table.correct_prefixes());
  report.re_pertinence = ratio(table.effective_incorrect, table.revisions());
  report.re_appropriateness =
      ratio(table.effective_incorrect, table.incorrect_prefixes());
  return report;
}

long long recomputation_cost(int n, const std::set<int>& recompute_log,
                             CostModel model) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  long long cost = 0;
  for (int t : recompute_log) {
    if (t < 1 || t > n) {
      throw std::invalid_argument("recompute step " + std::to_string(t) +
                                  " outside 1.." + std::to_string(n));
    }
    cost += model == CostModel::Quadratic
                ? static_cast<long long>(t) * static_cast<long long>(t)
                : static_cast<long long>(t);
  }
  return cost;
}

long long naive_recomputation_cost(int n, CostModel model) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  long long cost = 0;
  for (int t = 1; t <= n; ++t) {
    cost += model == CostModel::Quadratic
                ? static_cast<long long>(t) * static_cast<long long>(t)
                : static_cast<long long>(t);
  }
  return cost;
}

}  // namespace increval
