#include "increval/revision_analysis.hpp"

#include <algorithm>

namespace increval {

namespace {

bool has_edit_at(const IncrementalChart& chart, int t) {
  if (t < 2 || t > chart.length()) return false;
  for (int i = 1; i < t; ++i) {
    if (chart.label_at(t, i) != chart.label_at(t - 1, i)) return true;
  }
  return false;
}

// Correct labels among positions 1..limit of row `time`, judged against the
// target row of the same time step.
int matching_labels(const IncrementalChart& chart, const TargetPrefixes& target,
                    int time, int limit) {
  int matches = 0;
  for (int i = 1; i <= limit; ++i) {
    if (chart.label_at(time, i) == target.label_at(time, i)) ++matches;
  }
  return matches;
}

}  // namespace

std::vector<int> detect_revisions(const IncrementalChart& chart) {
  std::vector<int> steps;
  for (int t = 2; t <= chart.length(); ++t) {
    if (has_edit_at(chart, t)) steps.push_back(t);
  }
  return steps;
}

RevisionProfile classify_revision(int time, const IncrementalChart& chart,
                                  const TargetPrefixes& target,
                                  const TargetSpec& spec,
                                  std::span<const EditRecord> edits_at_time) {
  const int n = chart.length();
  if (static_cast<int>(target.prefixes.size()) != n) {
    throw std::invalid_argument("target/chart length mismatch");
  }
  if (!has_edit_at(chart, time)) {
    throw std::invalid_argument("step " + std::to_string(time) +
                                " is not a revision");
  }
  if (edits_at_time.empty()) {
    throw std::invalid_argument("revision must have at least one member edit");
  }
  for (const auto& record : edits_at_time) {
    if (record.edit.time != time) {
      throw std::invalid_argument("member edit at a different time step");
    }
  }

  RevisionProfile profile;

  const auto& previous = chart.prefixes[time - 2];
  const auto previous_result =
      prefix_correctness(previous, target.row(time - 1), spec);
  profile.convenience = previous_result.is_correct ? Convenience::Inconvenient
                                                   : Convenience::Convenient;

  // Raw correct-label counts over the carried-over positions; the newly
  // added label has no precedent and is excluded.
  const int before = matching_labels(chart, target, time - 1, time - 1);
  const int after = matching_labels(chart, target, time, time - 1);
  if (after > before) {
    profile.effectiveness = Effectiveness::Effective;
  } else if (after == before) {
    profile.effectiveness = Effectiveness::Ineffective;
  } else {
    profile.effectiveness = Effectiveness::Defective;
  }

  profile.recurrence = has_edit_at(chart, time - 1) || has_edit_at(chart, time + 1)
                           ? Recurrence::Recurrent
                           : Recurrence::Steady;

  int total_revisions = 0;
  for (int t = 2; t <= n; ++t) {
    if (has_edit_at(chart, t)) ++total_revisions;
  }
  profile.oscillation = total_revisions > 1 ? Oscillation::Oscillating
                                            : Oscillation::Stable;

  profile.company = edits_at_time.size() > 1 ? Company::Accompanied
                                             : Company::Isolated;

  const bool any_connected =
      std::any_of(edits_at_time.begin(), edits_at_time.end(), [](const auto& r) {
        return r.profile.connectedness == Connectedness::Connected;
      });
  const bool any_disconnected =
      std::any_of(edits_at_time.begin(), edits_at_time.end(), [](const auto& r) {
        return r.profile.connectedness == Connectedness::Disconnected;
      });
  if (any_connected && any_disconnected) {
    profile.connectedness = RevisionConnectedness::Both;
  } else if (any_connected) {
    profile.connectedness = RevisionConnectedness::ConnectedOnly;
  } else {
    profile.connectedness = RevisionConnectedness::DisconnectedOnly;
  }

  const bool any_short =
      std::any_of(edits_at_time.begin(), edits_at_time.end(), [](const auto& r) {
        return r.profile.distance == RangeClass::Short;
      });
  const bool any_long =
      std::any_of(edits_at_time.begin(), edits_at_time.end(), [](const auto& r) {
        return r.profile.distance == RangeClass::Long;
      });
  if (any_short && any_long) {
    profile.distance = RevisionRange::Both;
  } else if (any_short) {
    profile.distance = RevisionRange::ShortOnly;
  } else {
    profile.distance = RevisionRange::LongOnly;
  }

  bool edited_later = false;
  for (int t = time + 1; t <= n && !edited_later; ++t) {
    for (int i = 1; i <= time && i < t; ++i) {
      if (chart.label_at(t, i) != chart.label_at(t - 1, i)) {
        edited_later = true;
        break;
      }
    }
  }
  profile.definiteness =
      edited_later ? Definiteness::Temporary : Definiteness::Definite;

  profile.time = time == n ? StepKind::Final : StepKind::Intermediate;
  return profile;
}

RecomputationReport classify_recomputations(std::span<const int> revision_steps,
                                            const std::set<int>& recompute_log) {
  RecomputationReport report;
  const std::set<int> revisions(revision_steps.begin(), revision_steps.end());
  report.records.reserve(recompute_log.size());
  for (int t : recompute_log) {
    report.records.push_back({t, revisions.count(t) > 0});
  }
  for (int t : revisions) {
    if (recompute_log.count(t) == 0) {
      report.revisions_without_recompute.push_back(t);
    }
  }
  return report;
}

const char* to_string(RevisionConnectedness v) {
  switch (v) {
    case RevisionConnectedness::ConnectedOnly: return "connected-only";
    case RevisionConnectedness::DisconnectedOnly: return "disconnected-only";
    default: return "both";
  }
}
const char* to_string(RevisionRange v) {
  switch (v) {
    case RevisionRange::ShortOnly: return "short-only";
    case RevisionRange::LongOnly: return "long-only";
    default: return "both";
  }
}

}  // namespace increval
