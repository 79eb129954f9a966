#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "increval/analysis.hpp"
#include "increval/chart_io.hpp"
#include "increval/fixture.hpp"
#include "increval/report_io.hpp"
#include "increval/simulate.hpp"
#include "json.hpp"

using namespace increval;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("increval-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static inline int counter = 0;
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("chart json round trip preserves every field") {
  auto chart = builtin_fixture();
  chart.recompute_log = std::set<int>{1, 4, 9};
  chart.incremental_gold = chart.prefixes;
  const auto line = chart_to_json_line(chart);
  const auto parsed = chart_from_json_line(line);
  CHECK(parsed.id == chart.id);
  CHECK(parsed.tokens == chart.tokens);
  CHECK(parsed.prefixes == chart.prefixes);
  CHECK(parsed.gold == chart.gold);
  CHECK(parsed.recompute_log == chart.recompute_log);
  CHECK(parsed.incremental_gold == chart.incremental_gold);
}

TEST_CASE("chart write then read is lossless on random corpora") {
  TempDir dir;
  Rng rng(41);
  std::vector<IncrementalChart> charts;
  for (int c = 0; c < 50; ++c) {
    charts.push_back(testutil::random_chart(rng, 10, 4, 0.3, c % 3 == 0));
    charts.back().id = "chart-" + std::to_string(c);
  }
  const auto path = dir.path / "corpus.jsonl";
  write_charts(charts, path);
  const auto result = read_charts(path);
  CHECK(result.warnings.empty());
  REQUIRE(result.charts.size() == charts.size());
  for (std::size_t c = 0; c < charts.size(); ++c) {
    CHECK(result.charts[c].id == charts[c].id);
    CHECK(result.charts[c].tokens == charts[c].tokens);
    CHECK(result.charts[c].prefixes == charts[c].prefixes);
    CHECK(result.charts[c].gold == charts[c].gold);
    CHECK(result.charts[c].recompute_log == charts[c].recompute_log);
    CHECK(result.charts[c].incremental_gold == charts[c].incremental_gold);
  }
}

TEST_CASE("read_charts reports malformed records with their line") {
  TempDir dir;
  const auto path = dir.path / "bad.jsonl";
  write_text(path,
             R"({"id":"x","tokens":["a","b"],"prefixes":[["A"],["A","B","B"]]})"
             "\n"
             R"({"id":"y","tokens":["a"],"prefixes":[["A"]]})"
             "\n");

  SUBCASE("lenient mode skips and warns") {
    const auto result = read_charts(path);
    REQUIRE(result.charts.size() == 1);
    CHECK(result.charts[0].id == "y");
    REQUIRE(result.warnings.size() == 1);
    CHECK(result.warnings[0].find("line 1") != std::string::npos);
    CHECK(result.warnings[0].find("prefix length") != std::string::npos);
  }
  SUBCASE("strict mode throws") {
    CHECK_THROWS_AS(read_charts(path, {.strict = true}), ChartFormatError);
  }
}

TEST_CASE("read_charts accepts an empty file") {
  TempDir dir;
  const auto path = dir.path / "empty.jsonl";
  write_text(path, "");
  const auto result = read_charts(path);
  CHECK(result.charts.empty());
  CHECK(result.warnings.empty());
}

TEST_CASE("read_charts rejects a missing file") {
  CHECK_THROWS_AS(read_charts("/nonexistent/nowhere.jsonl"), IoError);
}

TEST_CASE("fixture validates and survives a round trip") {
  const auto chart = builtin_fixture();
  CHECK(validate_chart(chart, LabelVocab({"A", "B", "C", "D"})).ok());
  const auto parsed = chart_from_json_line(chart_to_json_line(chart));
  CHECK(parsed.prefixes == chart.prefixes);
}

TEST_CASE("structured report carries the fixture metrics") {
  std::vector<IncrementalChart> charts = {builtin_fixture()};
  const auto corpus = analyze_corpus(charts, {});
  const auto text = report_to_json_string(corpus);
  const auto report = nlohmann::json::parse(text);

  CHECK(report["meta"]["target"] == "gold");
  CHECK(report["meta"]["distance"] == 2);
  CHECK(report["corpus"]["metrics"]["rate_revision"].get<double>() ==
        doctest::Approx(0.7));
  // no recompute log: undefined, emitted as null
  CHECK(report["corpus"]["metrics"]["rate_recomputation"].is_null());
  CHECK(report["sequences"][0]["revision_steps"] ==
        nlohmann::json({2, 4, 5, 6, 8, 9, 10}));
  CHECK(report["corpus"]["cost"]["naive"] == 385);
  CHECK(report["corpus"]["cost"]["logged"].is_null());
}

TEST_CASE("write_report emits the requested files and respects force") {
  TempDir dir;
  std::vector<IncrementalChart> charts = {builtin_fixture()};
  const auto corpus = analyze_corpus(charts, {});
  const auto out = dir.path / "report";

  auto written = write_report(corpus, out, {});
  CHECK(written.size() == 3);
  CHECK(fs::exists(out / "report.json"));
  CHECK(fs::exists(out / "metrics.csv"));
  CHECK(fs::exists(out / "type_percentages.csv"));

  // undefined metrics are empty tabular cells
  std::ifstream metrics(out / "metrics.csv");
  std::string header, row;
  std::getline(metrics, header);
  std::getline(metrics, row);
  CHECK(header.substr(0, 13) == "rate_revision");
  CHECK(row.substr(0, 4) == "0.7,");
  CHECK(row.find("0.7,,,") == 0);  // both recomputation rates undefined

  CHECK_THROWS_AS(write_report(corpus, out, {}), IoError);
  WriteOptions force;
  force.force = true;
  CHECK_NOTHROW(write_report(corpus, out, force));

  WriteOptions tabular_only;
  tabular_only.format = ReportFormat::Tabular;
  tabular_only.force = true;
  CHECK(write_report(corpus, out, tabular_only).size() == 2);
}

TEST_CASE("corpus counts add up across sequences in the report") {
  Rng rng(42);
  std::vector<IncrementalChart> charts;
  for (int c = 0; c < 2; ++c) {
    charts.push_back(testutil::random_chart(rng, 8, 3));
    charts.back().id = "c" + std::to_string(c);
  }
  const auto corpus = analyze_corpus(charts, {});
  const auto report = nlohmann::json::parse(report_to_json_string(corpus));
  long long steps = 0, revised = 0;
  for (const auto& sequence : report["sequences"]) {
    steps += sequence["action_table"]["steps"].get<long long>();
    revised += sequence["action_table"]["revised_correct"].get<long long>() +
               sequence["action_table"]["revised_incorrect"].get<long long>();
  }
  CHECK(report["corpus"]["action_table"]["steps"] == steps);
  CHECK(report["corpus"]["action_table"]["revised_correct"].get<long long>() +
            report["corpus"]["action_table"]["revised_incorrect"]
                .get<long long>() ==
        revised);
}

TEST_CASE("comparing a report with itself yields zero deltas") {
  TempDir dir;
  std::vector<IncrementalChart> charts = {builtin_fixture()};
  const auto corpus = analyze_corpus(charts, {});
  const auto out = dir.path / "r";
  write_report(corpus, out, {});

  const auto deltas_text =
      compare_report_files(out / "report.json", out / "report.json");
  const auto deltas = nlohmann::json::parse(deltas_text);
  for (const auto& [name, entry] : deltas["metrics"].items()) {
    if (entry["delta"].is_null()) {
      CHECK(entry["left"].is_null());
    } else {
      CHECK(entry["delta"].get<double>() == 0.0);
    }
  }
}

TEST_CASE("compare surfaces metric movement between two runs") {
  TempDir dir;
  std::vector<IncrementalChart> fixture_corpus = {builtin_fixture()};
  const auto left = analyze_corpus(fixture_corpus, {});

  SimulationBatchParams params;
  params.policy.kind = PolicyKind::Monotonic;
  params.noise = 0.0;
  params.ambiguity = 0.0;
  const auto charts = simulate_batch(params);
  const auto right = analyze_corpus(charts, {});

  write_report(left, dir.path / "left", {});
  write_report(right, dir.path / "right", {});
  const auto deltas = nlohmann::json::parse(compare_report_files(
      dir.path / "left" / "report.json", dir.path / "right" / "report.json"));
  CHECK(deltas["metrics"]["rate_revision"]["delta"].get<double>() ==
        doctest::Approx(-0.7));
  // left run had no recompute log, right one has: no defined delta
  CHECK(deltas["metrics"]["rate_recomputation"]["delta"].is_null());
}
