#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "increval/analysis.hpp"

namespace increval {

enum class ReportFormat { Structured, Tabular, Both };

struct WriteOptions {
  ReportFormat format = ReportFormat::Both;
  bool force = false;  // required to overwrite report files from a prior run
};

// Structured: report.json (the full bundle). Tabular: metrics.csv (the nine
// policy metrics, undefined values as empty cells) and type_percentages.csv.
// Returns the written paths.
std::vector<std::filesystem::path> write_report(const CorpusAnalysis& analysis,
                                                const std::filesystem::path& dir,
                                                const WriteOptions& options);

std::string report_to_json_string(const CorpusAnalysis& analysis);

// Per-metric deltas (right minus left) between two structured reports;
// null when either side is undefined.
std::string compare_report_files(const std::filesystem::path& left,
                                 const std::filesystem::path& right);

}  // namespace increval
