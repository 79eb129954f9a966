#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "increval/analysis.hpp"
#include "increval/chart_io.hpp"
#include "increval/simulate.hpp"

using namespace increval;

TEST_CASE("make_synthetic_task respects ambiguity bounds and determinism") {
  const auto vocab = default_sim_vocab(4);

  SUBCASE("zero ambiguity means no offsets") {
    const auto task = make_synthetic_task(12, vocab, 0.0, 3, 42);
    CHECK(std::all_of(task.resolve_offsets.begin(), task.resolve_offsets.end(),
                      [](int r) { return r == 0; }));
  }
  SUBCASE("length one forces an immediate label") {
    const auto task = make_synthetic_task(1, vocab, 1.0, 5, 42);
    CHECK(task.resolve_offsets == std::vector<int>{0});
  }
  SUBCASE("offsets never exceed the remaining right context") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto task = make_synthetic_task(9, vocab, 1.0, 4, seed);
      for (int i = 1; i <= task.n; ++i) {
        CHECK(task.resolve_offsets[i - 1] <= task.n - i);
        CHECK(task.resolve_offsets[i - 1] <= 4);
      }
    }
  }
  SUBCASE("same seed, same task") {
    const auto a = make_synthetic_task(10, vocab, 0.5, 3, 7);
    const auto b = make_synthetic_task(10, vocab, 0.5, 3, 7);
    CHECK(a.gold == b.gold);
    CHECK(a.resolve_offsets == b.resolve_offsets);
  }
}

TEST_CASE("policy_decide for the built-in policies") {
  Rng rng(1);
  const std::vector<std::vector<Label>> rows;
  PolicySpec policy;

  policy.kind = PolicyKind::Monotonic;
  CHECK_FALSE(policy_decide(policy, {5, rows}, rng));
  policy.kind = PolicyKind::NaiveRestart;
  CHECK(policy_decide(policy, {1, rows}, rng));
  CHECK(policy_decide(policy, {100, rows}, rng));

  policy.kind = PolicyKind::EveryK;
  policy.k = 3;
  CHECK_FALSE(policy_decide(policy, {1, rows}, rng));
  CHECK(policy_decide(policy, {3, rows}, rng));
  CHECK_FALSE(policy_decide(policy, {4, rows}, rng));
  CHECK(policy_decide(policy, {6, rows}, rng));
}

TEST_CASE("bernoulli decisions are reproducible for a fixed seed") {
  PolicySpec policy;
  policy.kind = PolicyKind::Bernoulli;
  policy.q = 0.3;
  std::vector<bool> first, second;
  for (int run = 0; run < 2; ++run) {
    Rng rng(99);
    auto& decisions = run == 0 ? first : second;
    for (int t = 1; t <= 50; ++t) {
      decisions.push_back(policy_decide(policy, {t, {}}, rng));
    }
  }
  CHECK(first == second);
  CHECK(std::count(first.begin(), first.end(), true) > 0);
  CHECK(std::count(first.begin(), first.end(), false) > 0);
}

TEST_CASE("edit-rate policy compares the window fraction strictly") {
  PolicySpec policy;
  policy.kind = PolicyKind::EditRate;
  policy.window = 2;
  policy.threshold = 0.0;
  Rng rng(5);

  // two completed rows with one edit at step 2
  const std::vector<std::vector<Label>> rows = {{"A"}, {"B", "A"}};
  CHECK(policy_decide(policy, {3, rows}, rng));

  // threshold 1.0 can never be exceeded
  policy.threshold = 1.0;
  CHECK_FALSE(policy_decide(policy, {3, rows}, rng));

  // no completed steps yet: fraction 0, never above a threshold
  policy.threshold = 0.0;
  CHECK_FALSE(policy_decide(policy, {1, {}}, rng));

  const std::vector<std::vector<Label>> quiet = {{"A"}, {"A", "A"}};
  CHECK_FALSE(policy_decide(policy, {3, quiet}, rng));
}

TEST_CASE("monotonic simulation only extends") {
  const auto vocab = default_sim_vocab(4);
  const auto task = make_synthetic_task(12, vocab, 0.6, 4, 11);
  PolicySpec policy;
  policy.kind = PolicyKind::Monotonic;
  const auto run = simulate(task, policy, 0.3, 12);
  CHECK(detect_edits(run.chart).empty());
  REQUIRE(run.chart.recompute_log.has_value());
  CHECK(run.chart.recompute_log->empty());
}

TEST_CASE("noise-free unambiguous naive restart reproduces gold everywhere") {
  const auto vocab = default_sim_vocab(3);
  const auto task = make_synthetic_task(10, vocab, 0.0, 3, 21);
  PolicySpec policy;
  policy.kind = PolicyKind::NaiveRestart;
  const auto run = simulate(task, policy, 0.0, 22);
  for (int t = 1; t <= task.n; ++t) {
    for (int i = 1; i <= t; ++i) {
      CHECK(run.chart.label_at(t, i) == task.gold[i - 1]);
    }
  }
  CHECK(detect_revisions(run.chart).empty());
  CHECK(run.chart.recompute_log->size() == 10);
}

TEST_CASE("noise-free naive restart resolves each ambiguous position once") {
  const auto vocab = default_sim_vocab(4);
  PolicySpec policy;
  policy.kind = PolicyKind::NaiveRestart;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 8);
    const auto task = make_synthetic_task(n, vocab, 0.7, 4, seed * 31 + 1);
    const auto run = simulate(task, policy, 0.0, seed * 17 + 3);
    const auto& chart = run.chart;
    const auto target = derive_target(chart, {});

    // replay of the generative rule: gold once resolved, a stable wrong
    // stand-in before
    for (int i = 1; i <= n; ++i) {
      const int resolved_at = i + task.resolve_offsets[i - 1];
      for (int t = i; t <= n; ++t) {
        if (t >= resolved_at) {
          CHECK(chart.label_at(t, i) == task.gold[i - 1]);
        } else {
          CHECK(chart.label_at(t, i) != task.gold[i - 1]);
          CHECK(chart.label_at(t, i) == chart.label_at(i, i));
        }
      }
    }

    const auto edits = detect_edits(chart);
    for (int i = 1; i <= n; ++i) {
      const int offset = task.resolve_offsets[i - 1];
      const auto in_column = std::count_if(
          edits.begin(), edits.end(),
          [&](const Edit& e) { return e.position == i; });
      CHECK(in_column == (offset > 0 ? 1 : 0));
      if (offset > 0) {
        const auto it = std::find_if(
            edits.begin(), edits.end(),
            [&](const Edit& e) { return e.position == i; });
        REQUIRE(it != edits.end());
        CHECK(it->time == i + offset);
        const auto profile = classify_edit(*it, chart, target, 2);
        CHECK(profile.effectiveness == Effectiveness::Effective);
        CHECK(profile.definiteness == Definiteness::Definite);
      }
    }
  }
}

TEST_CASE("simulation is deterministic down to the serialized bytes") {
  SimulationBatchParams params;
  params.n = 14;
  params.vocab_size = 5;
  params.ambiguity = 0.5;
  params.noise = 0.2;
  params.policy.kind = PolicyKind::Bernoulli;
  params.policy.q = 0.4;
  params.seed = 123;
  params.count = 6;
  const auto first = simulate_batch(params);
  const auto second = simulate_batch(params);
  CHECK(charts_to_jsonl(first) == charts_to_jsonl(second));

  params.seed = 124;
  const auto third = simulate_batch(params);
  CHECK(charts_to_jsonl(first) != charts_to_jsonl(third));
}

TEST_CASE("simulated charts always validate") {
  Rng rng(77);
  for (int round = 0; round < 60; ++round) {
    SimulationBatchParams params;
    params.n = 1 + static_cast<int>(rng.next_u64() % 15);
    params.vocab_size = 2 + static_cast<int>(rng.next_u64() % 5);
    params.ambiguity = rng.next_unit();
    params.noise = rng.next_unit();
    params.policy.kind = static_cast<PolicyKind>(rng.next_int(0, 4));
    params.seed = rng.next_u64();
    const auto charts = simulate_batch(params);
    const auto vocab = default_sim_vocab(params.vocab_size);
    CHECK(validate_chart(charts[0], vocab).ok());
  }
}

TEST_CASE("simulate rejects invalid parameters") {
  const auto vocab = default_sim_vocab(3);
  CHECK_THROWS_AS(make_synthetic_task(0, vocab, 0.0, 2, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_synthetic_task(5, vocab, 1.5, 2, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(default_sim_vocab(1), std::invalid_argument);
  const auto task = make_synthetic_task(5, vocab, 0.0, 2, 1);
  CHECK_THROWS_AS(simulate(task, {}, 1.5, 0), std::invalid_argument);
  PolicySpec bad;
  bad.kind = PolicyKind::EveryK;
  bad.k = 0;
  CHECK_THROWS_AS(simulate(task, bad, 0.0, 0), std::invalid_argument);
}
