#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "increval/chart.hpp"

namespace increval {

// Charts are stored one JSON object per line (UTF-8). Keys: id, tokens,
// prefixes, and optionally gold, incremental_gold, recompute_steps.

struct ReadOptions {
  // Strict: the first malformed record aborts the read. Lenient: malformed
  // records are skipped and reported as warnings.
  bool strict = false;
};

struct ReadResult {
  std::vector<IncrementalChart> charts;
  std::vector<std::string> warnings;
};

ReadResult read_charts(const std::filesystem::path& path,
                       const ReadOptions& options = {});

// Path "-" writes to stdout.
void write_charts(std::span<const IncrementalChart> charts,
                  const std::filesystem::path& path);

std::string charts_to_jsonl(std::span<const IncrementalChart> charts);
std::string chart_to_json_line(const IncrementalChart& chart);
IncrementalChart chart_from_json_line(const std::string& line);

}  // namespace increval
