#pragma once

#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace increval {

using Label = std::string;

// Thrown when a requested configuration cannot be applied to the data at
// hand (e.g. a gold-based target on a chart without gold labels).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem / stream failures.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A record in a chart file that does not parse into a valid chart.
class ChartFormatError : public IoError {
 public:
  using IoError::IoError;
};

// Ordered set of admissible labels.
class LabelVocab {
 public:
  LabelVocab() = default;
  explicit LabelVocab(std::vector<Label> labels);

  bool contains(const Label& label) const { return index_.count(label) > 0; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<Label>& labels() const { return labels_; }

 private:
  std::vector<Label> labels_;
  std::unordered_set<Label> index_;
};

// One incremental labelling run. Row t (1-based) holds the t-label output
// prefix emitted after consuming the first t tokens, so the rows form a
// lower triangular matrix. Optional extras: the final gold labels, the set
// of time steps at which the processor recomputed, and a step-by-step gold
// prefix sequence for evaluation against locally valid interpretations.
struct IncrementalChart {
  std::string id;
  std::vector<std::string> tokens;
  std::vector<std::vector<Label>> prefixes;
  std::optional<std::vector<Label>> gold;
  std::optional<std::set<int>> recompute_log;
  std::optional<std::vector<std::vector<Label>>> incremental_gold;

  int length() const { return static_cast<int>(tokens.size()); }

  // 1-based time step and position.
  const Label& label_at(int time, int position) const {
    return prefixes[time - 1][position - 1];
  }
};

enum class TargetMode { GoldIncrementalised, Silver, GenuineIncremental };
enum class CorrectnessRule { BinaryExact, AccuracyThreshold };

// How reference prefixes are derived and when a prefix counts as correct.
struct TargetSpec {
  TargetMode mode = TargetMode::GoldIncrementalised;
  CorrectnessRule correctness = CorrectnessRule::BinaryExact;
  // Minimum fraction of matching labels; only read under AccuracyThreshold.
  double accuracy_threshold = 1.0;
};

// The per-time-step reference prefixes a chart is judged against.
struct TargetPrefixes {
  std::vector<std::vector<Label>> prefixes;

  const Label& label_at(int time, int position) const {
    return prefixes[time - 1][position - 1];
  }
  const std::vector<Label>& row(int time) const { return prefixes[time - 1]; }
};

struct ValidationIssue {
  int time = 0;      // 0 when not tied to a time step
  int position = 0;  // 0 when not tied to a position
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

struct CorrectnessResult {
  int correct_count = 0;
  bool is_correct = false;
};

// Checks every chart invariant; violations are data, not exceptions.
ValidationReport validate_chart(const IncrementalChart& chart,
                                const LabelVocab& vocab);

// Structure-only variant: label membership is checked against the labels
// the chart itself uses, so only shape invariants can fail.
ValidationReport validate_chart(const IncrementalChart& chart);

// All labels mentioned anywhere in the chart, in sorted order.
LabelVocab vocab_from_chart(const IncrementalChart& chart);

// Reference prefixes for the requested mode: slices of the gold sequence,
// slices of the chart's own final prefix, or the provided incremental gold.
TargetPrefixes derive_target(const IncrementalChart& chart,
                             const TargetSpec& spec);

// Label-by-label agreement between a prefix and its reference. The empty
// prefix is correct by definition.
CorrectnessResult prefix_correctness(std::span<const Label> prefix,
                                     std::span<const Label> target,
                                     const TargetSpec& spec);

}  // namespace increval
