#pragma once

#include <vector>

#include "increval/chart.hpp"

namespace increval {

// The ten dimensions along which a single label change is characterised.
// An edit changes exactly one cell relative to the previous time step; the
// compulsory addition of a label for the newest token is never an edit.

enum class Convenience { Convenient, Inconvenient };
enum class Effectiveness { Effective, Ineffective, Defective };
enum class Novelty { Innovative, Repetitive };
enum class Recurrence { Recurrent, Steady };
enum class Oscillation { Oscillating, Stable };
enum class Company { Accompanied, Isolated };
enum class Connectedness { Connected, Disconnected };
enum class RangeClass { Short, Long };
enum class Definiteness { Definite, Temporary };
enum class StepKind { Intermediate, Final };

struct EditProfile {
  Convenience convenience;
  Effectiveness effectiveness;
  Novelty novelty;
  Recurrence recurrence;
  Oscillation oscillation;
  Company company;
  Connectedness connectedness;
  RangeClass distance;
  Definiteness definiteness;
  StepKind time;
};

struct Edit {
  int time = 0;      // t in 2..n
  int position = 0;  // i in 1..t-1
  Label old_label;
  Label new_label;
};

struct EditRecord {
  Edit edit;
  EditProfile profile;
};

// Every cell whose label differs from the previous time step, ordered by
// (time, position). Additions are excluded by construction.
std::vector<Edit> detect_edits(const IncrementalChart& chart);

// Classifies one detected edit. `distance_param` is the horizon below which
// an edit counts as short range: (t - i) < distance_param.
EditProfile classify_edit(const Edit& edit, const IncrementalChart& chart,
                          const TargetPrefixes& target, int distance_param);

// For each position (index 0 = position 1): the time step after which the
// label never changes again. Equals the position itself for labels that are
// never edited.
std::vector<int> final_commit_times(const IncrementalChart& chart);

const char* to_string(Convenience v);
const char* to_string(Effectiveness v);
const char* to_string(Novelty v);
const char* to_string(Recurrence v);
const char* to_string(Oscillation v);
const char* to_string(Company v);
const char* to_string(Connectedness v);
const char* to_string(RangeClass v);
const char* to_string(Definiteness v);
const char* to_string(StepKind v);

}  // namespace increval
