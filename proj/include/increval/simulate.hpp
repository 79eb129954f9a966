#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "increval/chart.hpp"

namespace increval {

// Synthetic sequence labelling task. Position i carries a resolution offset
// r_i: its label only becomes determinable once the processor has seen
// r_i tokens of right context. Until then any emission for i is a stable,
// deliberately wrong placeholder standing in for a locally valid guess.
struct SyntheticTask {
  int n = 0;
  LabelVocab vocab;
  std::vector<Label> gold;
  std::vector<int> resolve_offsets;  // r_i >= 0, index 0 = position 1
};

enum class PolicyKind { Monotonic, NaiveRestart, EveryK, Bernoulli, EditRate };

struct PolicySpec {
  PolicyKind kind = PolicyKind::NaiveRestart;
  int k = 2;              // every-k: recompute when t is a multiple of k
  double q = 0.5;         // bernoulli: recompute with probability q
  int window = 3;         // edit-rate: number of recent steps inspected
  double threshold = 0.5; // edit-rate: recompute when edit fraction > threshold
};

struct SimulationRun {
  IncrementalChart chart;  // recompute_log always present (possibly empty)
  SyntheticTask task;
  PolicySpec policy;
  double noise = 0.0;
  std::uint64_t seed = 0;
};

// Deterministic, platform-independent generator (splitmix64).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  double next_unit();              // [0, 1)
  int next_int(int lo, int hi);    // inclusive bounds

 private:
  std::uint64_t state_;
};

SyntheticTask make_synthetic_task(int n, const LabelVocab& vocab,
                                  double ambiguity_rate, int max_offset,
                                  std::uint64_t seed);

// What a policy may inspect when deciding at step `time`: the completed
// prefixes p_1..p_{time-1}.
struct PolicyContext {
  int time = 1;
  std::span<const std::vector<Label>> rows;
};

bool policy_decide(const PolicySpec& policy, const PolicyContext& ctx, Rng& rng);

// Runs the processor over the task. At each step the newest position gets a
// label; when the policy fires, all earlier positions are re-emitted (which
// may revise them) and the step is logged as a recomputation. Steps without
// recomputation copy the previous prefix, so they never contain revisions.
SimulationRun simulate(const SyntheticTask& task, const PolicySpec& policy,
                       double noise, std::uint64_t seed);

struct SimulationBatchParams {
  int n = 10;
  int vocab_size = 4;
  double ambiguity = 0.3;
  int max_offset = 3;
  double noise = 0.05;
  PolicySpec policy;
  std::uint64_t seed = 1;
  int count = 1;
};

// `count` independent runs with seeds derived from the base seed; chart ids
// are "sim-1".."sim-<count>".
std::vector<IncrementalChart> simulate_batch(const SimulationBatchParams& params);

// "A", "B", ... for size <= 26, then "L27", "L28", ...
LabelVocab default_sim_vocab(int size);

const char* to_string(PolicyKind kind);
PolicyKind policy_kind_from_string(const std::string& name);

}  // namespace increval
