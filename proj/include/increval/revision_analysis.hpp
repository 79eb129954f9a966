#pragma once

#include <set>
#include <span>
#include <vector>

#include "increval/edit_analysis.hpp"

namespace increval {

// A revision is a time step whose prefix contains at least one edit. Its
// member edits determine the group-valued dimensions; novelty does not apply
// to revisions.

enum class RevisionConnectedness { ConnectedOnly, DisconnectedOnly, Both };
enum class RevisionRange { ShortOnly, LongOnly, Both };

struct RevisionProfile {
  Convenience convenience;
  Effectiveness effectiveness;
  Recurrence recurrence;
  Oscillation oscillation;
  Company company;
  RevisionConnectedness connectedness;
  RevisionRange distance;
  Definiteness definiteness;
  StepKind time;
};

struct RevisionRecord {
  int time = 0;
  std::vector<EditRecord> edits;  // member edits, ordered by position
  RevisionProfile profile;
};

// Time steps with at least one edit, ascending. Never contains 1.
std::vector<int> detect_revisions(const IncrementalChart& chart);

// Classifies the revision at `time`. `edits_at_time` must be the classified
// records of exactly the edits at that step.
RevisionProfile classify_revision(int time, const IncrementalChart& chart,
                                  const TargetPrefixes& target,
                                  const TargetSpec& spec,
                                  std::span<const EditRecord> edits_at_time);

struct RecomputationRecord {
  int time = 0;
  bool active = false;  // the recomputation produced a revision
};

struct RecomputationReport {
  std::vector<RecomputationRecord> records;  // one per logged step, ascending
  // Revision steps absent from the log: the processor revised without a
  // recorded recomputation. Reported, not rejected.
  std::vector<int> revisions_without_recompute;
};

RecomputationReport classify_recomputations(std::span<const int> revision_steps,
                                            const std::set<int>& recompute_log);

const char* to_string(RevisionConnectedness v);
const char* to_string(RevisionRange v);

}  // namespace increval
