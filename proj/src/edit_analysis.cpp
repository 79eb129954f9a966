#include "increval/edit_analysis.hpp"

namespace increval {

std::vector<Edit> detect_edits(const IncrementalChart& chart) {
  std::vector<Edit> edits;
  const int n = chart.length();
  for (int t = 2; t <= n; ++t) {
    for (int i = 1; i < t; ++i) {
      const Label& before = chart.label_at(t - 1, i);
      const Label& after = chart.label_at(t, i);
      if (before != after) {
        edits.push_back({t, i, before, after});
      }
    }
  }
  return edits;
}

namespace {

// Whether the cell (t, i) changed relative to the previous step.
bool edited(const IncrementalChart& chart, int t, int i) {
  if (t < 2 || i >= t) return false;
  return chart.label_at(t, i) != chart.label_at(t - 1, i);
}

}  // namespace

EditProfile classify_edit(const Edit& edit, const IncrementalChart& chart,
                          const TargetPrefixes& target, int distance_param) {
  const int n = chart.length();
  if (static_cast<int>(target.prefixes.size()) != n) {
    throw std::invalid_argument("target/chart length mismatch");
  }
  if (distance_param < 1) {
    throw std::invalid_argument("distance parameter must be >= 1");
  }
  const int t = edit.time;
  const int i = edit.position;
  if (t < 2 || t > n || i < 1 || i >= t) {
    throw std::invalid_argument("edit coordinates outside the chart");
  }

  EditProfile profile;

  // Old state is judged against the reference it was held under, the new
  // state against the current one. The two coincide for fixed per-position
  // targets (gold and silver modes).
  const bool old_correct = edit.old_label == target.label_at(t - 1, i);
  const bool new_correct = edit.new_label == target.label_at(t, i);
  profile.convenience =
      old_correct ? Convenience::Inconvenient : Convenience::Convenient;
  if (old_correct) {
    profile.effectiveness = Effectiveness::Defective;
  } else {
    profile.effectiveness =
        new_correct ? Effectiveness::Effective : Effectiveness::Ineffective;
  }

  bool seen_before = false;
  for (int prev = i; prev < t; ++prev) {
    if (chart.label_at(prev, i) == edit.new_label) {
      seen_before = true;
      break;
    }
  }
  profile.novelty = seen_before ? Novelty::Repetitive : Novelty::Innovative;

  // Length of the maximal run of consecutive editing steps around t in
  // column i.
  int run = 1;
  for (int up = t - 1; up > i && edited(chart, up, i); --up) ++run;
  for (int down = t + 1; down <= n && edited(chart, down, i); ++down) ++run;
  profile.recurrence = run > 1 ? Recurrence::Recurrent : Recurrence::Steady;

  int column_edits = 0;
  for (int step = i + 1; step <= n; ++step) {
    if (edited(chart, step, i)) ++column_edits;
  }
  profile.oscillation =
      column_edits > 1 ? Oscillation::Oscillating : Oscillation::Stable;

  int row_edits = 0;
  for (int pos = 1; pos < t; ++pos) {
    if (edited(chart, t, pos)) ++row_edits;
  }
  profile.company = row_edits > 1 ? Company::Accompanied : Company::Isolated;

  const bool neighbour =
      (i > 1 && edited(chart, t, i - 1)) || edited(chart, t, i + 1);
  profile.connectedness =
      neighbour ? Connectedness::Connected : Connectedness::Disconnected;

  profile.distance =
      (t - i) < distance_param ? RangeClass::Short : RangeClass::Long;

  bool edited_later = false;
  for (int step = t + 1; step <= n; ++step) {
    if (edited(chart, step, i)) {
      edited_later = true;
      break;
    }
  }
  profile.definiteness =
      edited_later ? Definiteness::Temporary : Definiteness::Definite;

  profile.time = t == n ? StepKind::Final : StepKind::Intermediate;
  return profile;
}

std::vector<int> final_commit_times(const IncrementalChart& chart) {
  const int n = chart.length();
  std::vector<int> commit(n, 0);
  for (int i = 1; i <= n; ++i) {
    int last_edit = 0;
    for (int t = i + 1; t <= n; ++t) {
      if (edited(chart, t, i)) last_edit = t;
    }
    commit[i - 1] = last_edit == 0 ? i : last_edit;
  }
  return commit;
}

const char* to_string(Convenience v) {
  return v == Convenience::Convenient ? "convenient" : "inconvenient";
}
const char* to_string(Effectiveness v) {
  switch (v) {
    case Effectiveness::Effective: return "effective";
    case Effectiveness::Ineffective: return "ineffective";
    default: return "defective";
  }
}
const char* to_string(Novelty v) {
  return v == Novelty::Innovative ? "innovative" : "repetitive";
}
const char* to_string(Recurrence v) {
  return v == Recurrence::Recurrent ? "recurrent" : "steady";
}
const char* to_string(Oscillation v) {
  return v == Oscillation::Oscillating ? "oscillating" : "stable";
}
const char* to_string(Company v) {
  return v == Company::Accompanied ? "accompanied" : "isolated";
}
const char* to_string(Connectedness v) {
  return v == Connectedness::Connected ? "connected" : "disconnected";
}
const char* to_string(RangeClass v) {
  return v == RangeClass::Short ? "short" : "long";
}
const char* to_string(Definiteness v) {
  return v == Definiteness::Definite ? "definite" : "temporary";
}
const char* to_string(StepKind v) {
  return v == StepKind::Intermediate ? "intermediate" : "final";
}

}  // namespace increval
