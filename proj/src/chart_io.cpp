#include "increval/chart_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace increval {

namespace {

using nlohmann::json;

std::vector<std::string> string_array(const json& value, const char* key) {
  if (!value.is_array()) {
    throw ChartFormatError(std::string(key) + " must be an array of strings");
  }
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_string()) {
      throw ChartFormatError(std::string(key) + " must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<std::vector<Label>> label_matrix(const json& value, const char* key) {
  if (!value.is_array()) {
    throw ChartFormatError(std::string(key) + " must be an array of arrays");
  }
  std::vector<std::vector<Label>> out;
  out.reserve(value.size());
  for (const auto& row : value) {
    out.push_back(string_array(row, key));
  }
  return out;
}

}  // namespace

IncrementalChart chart_from_json_line(const std::string& line) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::exception& e) {
    throw ChartFormatError(std::string("not valid JSON: ") + e.what());
  }
  if (!record.is_object()) throw ChartFormatError("record must be an object");
  if (!record.contains("id") || !record["id"].is_string()) {
    throw ChartFormatError("missing string field 'id'");
  }
  if (!record.contains("tokens") || !record.contains("prefixes")) {
    throw ChartFormatError("missing field 'tokens' or 'prefixes'");
  }

  IncrementalChart chart;
  chart.id = record["id"].get<std::string>();
  chart.tokens = string_array(record["tokens"], "tokens");
  chart.prefixes = label_matrix(record["prefixes"], "prefixes");
  if (record.contains("gold") && !record["gold"].is_null()) {
    chart.gold = string_array(record["gold"], "gold");
  }
  if (record.contains("incremental_gold") &&
      !record["incremental_gold"].is_null()) {
    chart.incremental_gold =
        label_matrix(record["incremental_gold"], "incremental_gold");
  }
  if (record.contains("recompute_steps") &&
      !record["recompute_steps"].is_null()) {
    const auto& steps = record["recompute_steps"];
    if (!steps.is_array()) {
      throw ChartFormatError("recompute_steps must be an array of integers");
    }
    chart.recompute_log.emplace();
    for (const auto& step : steps) {
      if (!step.is_number_integer()) {
        throw ChartFormatError("recompute_steps must contain only integers");
      }
      chart.recompute_log->insert(step.get<int>());
    }
  }

  const auto validation = validate_chart(chart);
  if (!validation.ok()) {
    throw ChartFormatError(validation.summary());
  }
  return chart;
}

std::string chart_to_json_line(const IncrementalChart& chart) {
  json record;
  record["id"] = chart.id;
  record["tokens"] = chart.tokens;
  record["prefixes"] = chart.prefixes;
  if (chart.gold) record["gold"] = *chart.gold;
  if (chart.incremental_gold) {
    record["incremental_gold"] = *chart.incremental_gold;
  }
  if (chart.recompute_log) {
    record["recompute_steps"] = *chart.recompute_log;
  }
  return record.dump();
}

ReadResult read_charts(const std::filesystem::path& path,
                       const ReadOptions& options) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open chart file: " + path.string());
  }
  ReadResult result;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      result.charts.push_back(chart_from_json_line(line));
    } catch (const ChartFormatError& e) {
      const std::string message =
          "line " + std::to_string(line_number) + ": " + e.what();
      if (options.strict) {
        throw ChartFormatError(path.string() + ": " + message);
      }
      result.warnings.push_back(message);
    }
  }
  return result;
}

std::string charts_to_jsonl(std::span<const IncrementalChart> charts) {
  std::ostringstream out;
  for (const auto& chart : charts) {
    out << chart_to_json_line(chart) << '\n';
  }
  return out.str();
}

void write_charts(std::span<const IncrementalChart> charts,
                  const std::filesystem::path& path) {
  const std::string payload = charts_to_jsonl(charts);
  if (path == "-") {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write chart file: " + path.string());
  }
  out << payload;
  if (!out) {
    throw IoError("failed while writing chart file: " + path.string());
  }
}

}  // namespace increval
