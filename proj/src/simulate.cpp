#include "increval/simulate.hpp"

#include <algorithm>

namespace increval {

std::uint64_t Rng::next_u64() {
  // splitmix64
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int Rng::next_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

SyntheticTask make_synthetic_task(int n, const LabelVocab& vocab,
                                  double ambiguity_rate, int max_offset,
                                  std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("task length must be >= 1");
  if (vocab.size() < 2) {
    throw std::invalid_argument("task vocabulary must have >= 2 labels");
  }
  if (ambiguity_rate < 0.0 || ambiguity_rate > 1.0) {
    throw std::invalid_argument("ambiguity rate must be in [0,1]");
  }
  if (max_offset < 0) throw std::invalid_argument("max offset must be >= 0");

  SyntheticTask task;
  task.n = n;
  task.vocab = vocab;
  task.gold.reserve(n);
  task.resolve_offsets.assign(n, 0);
  Rng rng(seed);
  const auto& labels = vocab.labels();
  for (int i = 1; i <= n; ++i) {
    task.gold.push_back(labels[rng.next_int(0, static_cast<int>(labels.size()) - 1)]);
  }
  for (int i = 1; i <= n; ++i) {
    const int cap = std::min(max_offset, n - i);
    if (cap >= 1 && rng.next_unit() < ambiguity_rate) {
      task.resolve_offsets[i - 1] = rng.next_int(1, cap);
    }
  }
  return task;
}

namespace {

Label wrong_label(const LabelVocab& vocab, const Label& gold, Rng& rng) {
  const auto& labels = vocab.labels();
  const int pick = rng.next_int(0, static_cast<int>(labels.size()) - 2);
  int index = 0;
  for (const auto& label : labels) {
    if (label == gold) continue;
    if (index == pick) return label;
    ++index;
  }
  return labels.back();  // unreachable for valid vocabularies
}

bool step_has_edit(std::span<const std::vector<Label>> rows, int step) {
  if (step < 2 || step > static_cast<int>(rows.size())) return false;
  for (int i = 0; i < step - 1; ++i) {
    if (rows[step - 1][i] != rows[step - 2][i]) return true;
  }
  return false;
}

void validate_policy(const PolicySpec& policy) {
  switch (policy.kind) {
    case PolicyKind::EveryK:
      if (policy.k < 1) throw std::invalid_argument("every-k requires k >= 1");
      break;
    case PolicyKind::Bernoulli:
      if (policy.q < 0.0 || policy.q > 1.0) {
        throw std::invalid_argument("bernoulli requires q in [0,1]");
      }
      break;
    case PolicyKind::EditRate:
      if (policy.window < 1) {
        throw std::invalid_argument("edit-rate requires window >= 1");
      }
      if (policy.threshold < 0.0 || policy.threshold > 1.0) {
        throw std::invalid_argument("edit-rate requires threshold in [0,1]");
      }
      break;
    default:
      break;
  }
}

}  // namespace

bool policy_decide(const PolicySpec& policy, const PolicyContext& ctx, Rng& rng) {
  if (ctx.time < 1) throw std::invalid_argument("time step must be >= 1");
  validate_policy(policy);
  switch (policy.kind) {
    case PolicyKind::Monotonic:
      return false;
    case PolicyKind::NaiveRestart:
      return true;
    case PolicyKind::EveryK:
      return ctx.time % policy.k == 0;
    case PolicyKind::Bernoulli:
      return rng.next_unit() < policy.q;
    case PolicyKind::EditRate: {
      // Edit fraction over the completed steps in the trailing window;
      // step 1 can never contain an edit, so the window starts at 2.
      const int latest = ctx.time - 1;
      const int earliest = std::max(2, ctx.time - policy.window);
      if (latest < earliest) return false;
      int with_edit = 0;
      for (int step = earliest; step <= latest; ++step) {
        if (step_has_edit(ctx.rows, step)) ++with_edit;
      }
      const double rate = static_cast<double>(with_edit) /
                          static_cast<double>(latest - earliest + 1);
      return rate > policy.threshold;
    }
  }
  return false;
}

SimulationRun simulate(const SyntheticTask& task, const PolicySpec& policy,
                       double noise, std::uint64_t seed) {
  if (task.n < 1 || static_cast<int>(task.gold.size()) != task.n ||
      static_cast<int>(task.resolve_offsets.size()) != task.n) {
    throw std::invalid_argument("malformed synthetic task");
  }
  if (noise < 0.0 || noise > 1.0) {
    throw std::invalid_argument("noise must be in [0,1]");
  }
  validate_policy(policy);

  SimulationRun run;
  run.task = task;
  run.policy = policy;
  run.noise = noise;
  run.seed = seed;

  Rng rng(seed);
  const int n = task.n;

  // Stable stand-ins emitted while a position is still unresolved.
  std::vector<Label> placeholders(n);
  for (int i = 1; i <= n; ++i) {
    if (task.resolve_offsets[i - 1] > 0) {
      placeholders[i - 1] = wrong_label(task.vocab, task.gold[i - 1], rng);
    }
  }

  auto emit = [&](int position, int time) -> Label {
    if (time >= position + task.resolve_offsets[position - 1]) {
      const bool flip = rng.next_unit() < noise;
      return flip ? wrong_label(task.vocab, task.gold[position - 1], rng)
                  : task.gold[position - 1];
    }
    return placeholders[position - 1];
  };

  IncrementalChart& chart = run.chart;
  chart.id = "sim-" + std::to_string(seed);
  chart.gold = task.gold;
  chart.recompute_log.emplace();
  chart.tokens.reserve(n);
  chart.prefixes.reserve(n);
  for (int i = 1; i <= n; ++i) chart.tokens.push_back("w" + std::to_string(i));

  for (int t = 1; t <= n; ++t) {
    const bool recompute =
        policy_decide(policy, {t, std::span(chart.prefixes)}, rng);
    std::vector<Label> row;
    row.reserve(t);
    if (recompute) {
      chart.recompute_log->insert(t);
      for (int i = 1; i < t; ++i) row.push_back(emit(i, t));
    } else if (t > 1) {
      row = chart.prefixes.back();
    }
    row.push_back(emit(t, t));
    chart.prefixes.push_back(std::move(row));
  }
  return run;
}

std::vector<IncrementalChart> simulate_batch(const SimulationBatchParams& params) {
  if (params.count < 1) throw std::invalid_argument("count must be >= 1");
  std::vector<IncrementalChart> charts;
  charts.reserve(params.count);
  const LabelVocab vocab = default_sim_vocab(params.vocab_size);
  for (int index = 0; index < params.count; ++index) {
    Rng mixer(params.seed + static_cast<std::uint64_t>(index));
    const std::uint64_t task_seed = mixer.next_u64();
    const std::uint64_t run_seed = mixer.next_u64();
    const SyntheticTask task =
        make_synthetic_task(params.n, vocab, params.ambiguity,
                            params.max_offset, task_seed);
    SimulationRun run = simulate(task, params.policy, params.noise, run_seed);
    run.chart.id = "sim-" + std::to_string(index + 1);
    charts.push_back(std::move(run.chart));
  }
  return charts;
}

LabelVocab default_sim_vocab(int size) {
  if (size < 2) throw std::invalid_argument("vocabulary size must be >= 2");
  std::vector<Label> labels;
  labels.reserve(size);
  for (int i = 0; i < size; ++i) {
    if (i < 26) {
      labels.emplace_back(1, static_cast<char>('A' + i));
    } else {
      labels.push_back("L" + std::to_string(i + 1));
    }
  }
  return LabelVocab(std::move(labels));
}

const char* to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::Monotonic: return "monotonic";
    case PolicyKind::NaiveRestart: return "naive-restart";
    case PolicyKind::EveryK: return "every-k";
    case PolicyKind::Bernoulli: return "bernoulli";
    default: return "edit-rate";
  }
}

PolicyKind policy_kind_from_string(const std::string& name) {
  if (name == "monotonic") return PolicyKind::Monotonic;
  if (name == "naive-restart") return PolicyKind::NaiveRestart;
  if (name == "every-k") return PolicyKind::EveryK;
  if (name == "bernoulli") return PolicyKind::Bernoulli;
  if (name == "edit-rate") return PolicyKind::EditRate;
  throw std::invalid_argument("unknown policy: " + name);
}

}  // namespace increval
