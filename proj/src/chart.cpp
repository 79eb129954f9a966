#include "increval/chart.hpp"

#include <algorithm>
#include <sstream>

namespace increval {

LabelVocab::LabelVocab(std::vector<Label> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("label vocabulary must not be empty");
  }
  for (const auto& label : labels_) {
    if (!index_.insert(label).second) {
      throw std::invalid_argument("duplicate label in vocabulary: " + label);
    }
  }
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i > 0) out << "; ";
    out << issues[i].message;
  }
  return out.str();
}

LabelVocab vocab_from_chart(const IncrementalChart& chart) {
  std::set<Label> seen;
  for (const auto& row : chart.prefixes) seen.insert(row.begin(), row.end());
  if (chart.gold) seen.insert(chart.gold->begin(), chart.gold->end());
  if (chart.incremental_gold) {
    for (const auto& row : *chart.incremental_gold)
      seen.insert(row.begin(), row.end());
  }
  if (seen.empty()) seen.insert("_");  // degenerate chart, nothing to check
  return LabelVocab(std::vector<Label>(seen.begin(), seen.end()));
}

namespace {

void check_triangular(const std::vector<std::vector<Label>>& rows, int n,
                      const std::string& what, ValidationReport& report) {
  if (static_cast<int>(rows.size()) != n) {
    report.issues.push_back(
        {0, 0, what + " has " + std::to_string(rows.size()) +
                   " rows, expected " + std::to_string(n)});
    return;
  }
  for (int t = 1; t <= n; ++t) {
    const auto& row = rows[t - 1];
    if (static_cast<int>(row.size()) != t) {
      report.issues.push_back(
          {t, 0, what + " length " + std::to_string(row.size()) + " at t=" +
                     std::to_string(t) + ", expected " + std::to_string(t)});
    }
  }
}

void check_labels(const std::vector<std::vector<Label>>& rows,
                  const LabelVocab& vocab, const std::string& what,
                  ValidationReport& report) {
  for (std::size_t t = 0; t < rows.size(); ++t) {
    for (std::size_t i = 0; i < rows[t].size(); ++i) {
      if (!vocab.contains(rows[t][i])) {
        report.issues.push_back({static_cast<int>(t + 1),
                                 static_cast<int>(i + 1),
                                 "unknown label '" + rows[t][i] + "' in " +
                                     what + " at t=" + std::to_string(t + 1) +
                                     ", i=" + std::to_string(i + 1)});
      }
    }
  }
}

}  // namespace

ValidationReport validate_chart(const IncrementalChart& chart,
                                const LabelVocab& vocab) {
  ValidationReport report;
  const int n = chart.length();
  if (n == 0) {
    report.issues.push_back({0, 0, "chart has no tokens"});
  }
  check_triangular(chart.prefixes, n, "prefix", report);
  check_labels(chart.prefixes, vocab, "prefixes", report);

  if (chart.gold) {
    if (static_cast<int>(chart.gold->size()) != n) {
      report.issues.push_back(
          {0, 0, "gold has " + std::to_string(chart.gold->size()) +
                     " labels, expected " + std::to_string(n)});
    }
    for (std::size_t i = 0; i < chart.gold->size(); ++i) {
      if (!vocab.contains((*chart.gold)[i])) {
        report.issues.push_back(
            {0, static_cast<int>(i + 1),
             "unknown label '" + (*chart.gold)[i] + "' in gold at i=" +
                 std::to_string(i + 1)});
      }
    }
  }

  if (chart.incremental_gold) {
    check_triangular(*chart.incremental_gold, n, "incremental_gold prefix",
                     report);
    check_labels(*chart.incremental_gold, vocab, "incremental_gold", report);
  }

  if (chart.recompute_log) {
    for (int t : *chart.recompute_log) {
      if (t < 1 || t > n) {
        report.issues.push_back(
            {t, 0, "recompute step " + std::to_string(t) + " outside 1.." +
                       std::to_string(n)});
      }
    }
  }
  return report;
}

ValidationReport validate_chart(const IncrementalChart& chart) {
  return validate_chart(chart, vocab_from_chart(chart));
}

TargetPrefixes derive_target(const IncrementalChart& chart,
                             const TargetSpec& spec) {
  const int n = chart.length();
  TargetPrefixes target;
  target.prefixes.reserve(n);
  switch (spec.mode) {
    case TargetMode::GoldIncrementalised: {
      if (!chart.gold) {
        throw ConfigError(
            "gold-incrementalised target requires the 'gold' field");
      }
      for (int t = 1; t <= n; ++t) {
        target.prefixes.emplace_back(chart.gold->begin(),
                                     chart.gold->begin() + t);
      }
      break;
    }
    case TargetMode::Silver: {
      if (n < 1) {
        throw ConfigError("silver target requires a non-empty chart");
      }
      const auto& final_prefix = chart.prefixes.back();
      for (int t = 1; t <= n; ++t) {
        target.prefixes.emplace_back(final_prefix.begin(),
                                     final_prefix.begin() + t);
      }
      break;
    }
    case TargetMode::GenuineIncremental: {
      if (!chart.incremental_gold) {
        throw ConfigError(
            "genuine-incremental target requires the 'incremental_gold' field");
      }
      target.prefixes = *chart.incremental_gold;
      break;
    }
  }
  return target;
}

CorrectnessResult prefix_correctness(std::span<const Label> prefix,
                                     std::span<const Label> target,
                                     const TargetSpec& spec) {
  if (prefix.size() != target.size()) {
    throw std::invalid_argument(
        "prefix/target length mismatch: " + std::to_string(prefix.size()) +
        " vs " + std::to_string(target.size()));
  }
  CorrectnessResult result;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] == target[i]) ++result.correct_count;
  }
  if (prefix.empty()) {
    result.is_correct = true;  // no decision has been wrong yet
  } else if (spec.correctness == CorrectnessRule::BinaryExact) {
    result.is_correct =
        result.correct_count == static_cast<int>(prefix.size());
  } else {
    result.is_correct =
        static_cast<double>(result.correct_count) /
            static_cast<double>(prefix.size()) >=
        spec.accuracy_threshold;
  }
  return result;
}

}  // namespace increval
