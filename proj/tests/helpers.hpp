#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "increval/chart.hpp"
#include "increval/edit_analysis.hpp"
#include "increval/revision_analysis.hpp"
#include "increval/simulate.hpp"

namespace testutil {

using increval::IncrementalChart;

inline IncrementalChart make_chart(
    std::vector<std::vector<std::string>> prefixes,
    std::optional<std::vector<std::string>> gold = std::nullopt) {
  IncrementalChart chart;
  chart.id = "test";
  chart.prefixes = std::move(prefixes);
  for (std::size_t i = 1; i <= chart.prefixes.size(); ++i) {
    chart.tokens.push_back("w" + std::to_string(i));
  }
  chart.gold = std::move(gold);
  return chart;
}

// Column-wise generation with a per-step flip probability, which yields
// realistic mixes of runs, oscillations and stable columns.
inline IncrementalChart random_chart(increval::Rng& rng, int max_n,
                                     int vocab_size, double edit_prob = 0.3,
                                     bool with_incremental_gold = false) {
  const int n = rng.next_int(1, max_n);
  const auto vocab = increval::default_sim_vocab(vocab_size);
  const auto& labels = vocab.labels();
  auto pick = [&]() { return labels[rng.next_int(0, vocab_size - 1)]; };

  IncrementalChart chart;
  chart.id = "rand";
  chart.prefixes.assign(n, {});
  for (int t = 1; t <= n; ++t) {
    chart.prefixes[t - 1].resize(t);
    for (int i = 1; i < t; ++i) {
      const std::string& previous = chart.prefixes[t - 2][i - 1];
      if (rng.next_unit() < edit_prob) {
        std::string next = pick();
        while (next == previous) next = pick();
        chart.prefixes[t - 1][i - 1] = next;
      } else {
        chart.prefixes[t - 1][i - 1] = previous;
      }
    }
    chart.prefixes[t - 1][t - 1] = pick();
    chart.tokens.push_back("w" + std::to_string(t));
  }
  chart.gold.emplace();
  for (int i = 0; i < n; ++i) chart.gold->push_back(pick());
  if (with_incremental_gold) {
    chart.incremental_gold.emplace();
    for (int t = 1; t <= n; ++t) {
      std::vector<std::string> row;
      for (int i = 0; i < t; ++i) row.push_back(pick());
      chart.incremental_gold->push_back(std::move(row));
    }
  }
  const int log_kind = rng.next_int(0, 2);
  if (log_kind == 1) {
    chart.recompute_log.emplace();
    for (int t = 1; t <= n; ++t) {
      if (rng.next_unit() < 0.5) chart.recompute_log->insert(t);
    }
  } else if (log_kind == 2) {
    chart.recompute_log.emplace();
    for (int t = 1; t <= n; ++t) chart.recompute_log->insert(t);
  }
  return chart;
}

inline std::map<std::string, std::string> profile_map(
    const increval::EditProfile& profile) {
  using increval::to_string;
  return {
      {"convenience", to_string(profile.convenience)},
      {"effectiveness", to_string(profile.effectiveness)},
      {"novelty", to_string(profile.novelty)},
      {"recurrence", to_string(profile.recurrence)},
      {"oscillation", to_string(profile.oscillation)},
      {"company", to_string(profile.company)},
      {"connectedness", to_string(profile.connectedness)},
      {"distance", to_string(profile.distance)},
      {"definiteness", to_string(profile.definiteness)},
      {"time", to_string(profile.time)},
  };
}

inline std::map<std::string, std::string> profile_map(
    const increval::RevisionProfile& profile) {
  using increval::to_string;
  return {
      {"convenience", to_string(profile.convenience)},
      {"effectiveness", to_string(profile.effectiveness)},
      {"recurrence", to_string(profile.recurrence)},
      {"oscillation", to_string(profile.oscillation)},
      {"company", to_string(profile.company)},
      {"connectedness", to_string(profile.connectedness)},
      {"distance", to_string(profile.distance)},
      {"definiteness", to_string(profile.definiteness)},
      {"time", to_string(profile.time)},
  };
}

}  // namespace testutil
