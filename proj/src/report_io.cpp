#include "increval/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "increval/version.hpp"
#include "json.hpp"

namespace increval {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json opt_json(const std::optional<double>& value) {
  if (!value) return nullptr;
  return *value;
}

ordered_json metrics_json(const MetricsReport& metrics) {
  ordered_json j;
  j["rate_revision"] = opt_json(metrics.rate_revision);
  j["rate_recomputation"] = opt_json(metrics.rate_recomputation);
  j["rate_active_recomputation"] = opt_json(metrics.rate_active_recomputation);
  j["r_pertinence"] = opt_json(metrics.r_pertinence);
  j["r_appropriateness"] = opt_json(metrics.r_appropriateness);
  j["a_pertinence"] = opt_json(metrics.a_pertinence);
  j["a_appropriateness"] = opt_json(metrics.a_appropriateness);
  j["re_pertinence"] = opt_json(metrics.re_pertinence);
  j["re_appropriateness"] = opt_json(metrics.re_appropriateness);
  return j;
}

ordered_json table_json(const ActionTable& table) {
  ordered_json j;
  j["steps"] = table.steps;
  j["revised_correct"] = table.revised_correct;
  j["revised_incorrect"] = table.revised_incorrect;
  j["added_correct"] = table.added_correct;
  j["added_incorrect"] = table.added_incorrect;
  j["effective_correct"] = table.effective_correct;
  j["effective_incorrect"] = table.effective_incorrect;
  if (table.has_recompute_log) {
    j["recomputations"] = table.recomputations;
    j["active_recomputations"] = table.active_recomputations;
  } else {
    j["recomputations"] = nullptr;
    j["active_recomputations"] = nullptr;
  }
  return j;
}

ordered_json edit_json(const EditRecord& record) {
  ordered_json j;
  j["time"] = record.edit.time;
  j["position"] = record.edit.position;
  j["old"] = record.edit.old_label;
  j["new"] = record.edit.new_label;
  ordered_json profile;
  profile["convenience"] = to_string(record.profile.convenience);
  profile["effectiveness"] = to_string(record.profile.effectiveness);
  profile["novelty"] = to_string(record.profile.novelty);
  profile["recurrence"] = to_string(record.profile.recurrence);
  profile["oscillation"] = to_string(record.profile.oscillation);
  profile["company"] = to_string(record.profile.company);
  profile["connectedness"] = to_string(record.profile.connectedness);
  profile["distance"] = to_string(record.profile.distance);
  profile["definiteness"] = to_string(record.profile.definiteness);
  profile["time"] = to_string(record.profile.time);
  j["profile"] = std::move(profile);
  return j;
}

ordered_json revision_json(const RevisionRecord& record) {
  ordered_json j;
  j["time"] = record.time;
  ordered_json positions = ordered_json::array();
  for (const auto& edit : record.edits) positions.push_back(edit.edit.position);
  j["edit_positions"] = std::move(positions);
  ordered_json profile;
  profile["convenience"] = to_string(record.profile.convenience);
  profile["effectiveness"] = to_string(record.profile.effectiveness);
  profile["recurrence"] = to_string(record.profile.recurrence);
  profile["oscillation"] = to_string(record.profile.oscillation);
  profile["company"] = to_string(record.profile.company);
  profile["connectedness"] = to_string(record.profile.connectedness);
  profile["distance"] = to_string(record.profile.distance);
  profile["definiteness"] = to_string(record.profile.definiteness);
  profile["time"] = to_string(record.profile.time);
  j["profile"] = std::move(profile);
  return j;
}

ordered_json sequence_json(const ChartAnalysis& analysis) {
  ordered_json j;
  j["id"] = analysis.id;
  j["n"] = analysis.n;
  j["revision_steps"] = analysis.revision_steps;
  j["commit_times"] = analysis.commit_times;
  j["action_table"] = table_json(analysis.table);
  j["metrics"] = metrics_json(analysis.metrics);
  ordered_json cost;
  cost["naive"] = analysis.naive_cost;
  cost["logged"] =
      analysis.logged_cost ? ordered_json(*analysis.logged_cost) : nullptr;
  j["cost"] = std::move(cost);
  ordered_json edits = ordered_json::array();
  for (const auto& record : analysis.edits) edits.push_back(edit_json(record));
  j["edits"] = std::move(edits);
  ordered_json revisions = ordered_json::array();
  for (const auto& record : analysis.revisions) {
    revisions.push_back(revision_json(record));
  }
  j["revisions"] = std::move(revisions);
  if (analysis.recomputations) {
    ordered_json recompute;
    ordered_json records = ordered_json::array();
    for (const auto& record : analysis.recomputations->records) {
      records.push_back({{"time", record.time}, {"active", record.active}});
    }
    recompute["records"] = std::move(records);
    recompute["revisions_without_recompute"] =
        analysis.recomputations->revisions_without_recompute;
    j["recomputations"] = std::move(recompute);
  } else {
    j["recomputations"] = nullptr;
  }
  return j;
}

ordered_json distributions_json(const DistributionReport& distributions) {
  ordered_json j;
  j["revision_position_histogram"] = distributions.revision_position_histogram;
  ordered_json cdf = ordered_json::array();
  for (const auto& [fraction, share] : distributions.revision_fraction_cdf) {
    cdf.push_back({fraction, share});
  }
  j["revision_fraction_cdf"] = std::move(cdf);
  ordered_json percentages = ordered_json::array();
  for (const auto& row : distributions.type_percentages) {
    ordered_json entry;
    entry["kind"] = row.kind;
    entry["dimension"] = row.dimension;
    entry["class"] = row.label;
    entry["count"] = row.count;
    entry["percent"] = row.percent;
    percentages.push_back(std::move(entry));
  }
  j["type_percentages"] = std::move(percentages);
  return j;
}

const char* target_mode_name(TargetMode mode) {
  switch (mode) {
    case TargetMode::GoldIncrementalised: return "gold";
    case TargetMode::Silver: return "silver";
    default: return "genuine";
  }
}

ordered_json report_json(const CorpusAnalysis& analysis) {
  ordered_json j;
  ordered_json meta;
  meta["tool"] = "increval";
  meta["version"] = kVersion;
  meta["target"] = target_mode_name(analysis.options.target.mode);
  meta["correctness"] =
      analysis.options.target.correctness == CorrectnessRule::BinaryExact
          ? "exact"
          : "accuracy";
  meta["accuracy_threshold"] =
      analysis.options.target.correctness == CorrectnessRule::AccuracyThreshold
          ? ordered_json(analysis.options.target.accuracy_threshold)
          : ordered_json(nullptr);
  meta["distance"] = analysis.options.distance_param;
  meta["bins"] = analysis.options.bins;
  meta["cost_model"] =
      analysis.options.cost_model == CostModel::Quadratic ? "quadratic"
                                                          : "linear";
  meta["sequences"] = analysis.sequences.size();
  j["meta"] = std::move(meta);

  ordered_json corpus;
  corpus["action_table"] = table_json(analysis.table);
  corpus["metrics"] = metrics_json(analysis.metrics);
  ordered_json cost;
  cost["naive"] = analysis.naive_cost;
  cost["logged"] =
      analysis.logged_cost ? ordered_json(*analysis.logged_cost) : nullptr;
  corpus["cost"] = std::move(cost);
  j["corpus"] = std::move(corpus);

  j["distributions"] = distributions_json(analysis.distributions);

  ordered_json sequences = ordered_json::array();
  for (const auto& sequence : analysis.sequences) {
    sequences.push_back(sequence_json(sequence));
  }
  j["sequences"] = std::move(sequences);
  return j;
}

std::string format_cell(const std::optional<double>& value) {
  if (!value) return "";
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", *value);
  return buffer;
}

std::string metrics_csv(const MetricsReport& metrics) {
  std::ostringstream out;
  out << "rate_revision,rate_recomputation,rate_active_recomputation,"
         "r_pertinence,r_appropriateness,a_pertinence,a_appropriateness,"
         "re_pertinence,re_appropriateness\n";
  out << format_cell(metrics.rate_revision) << ','
      << format_cell(metrics.rate_recomputation) << ','
      << format_cell(metrics.rate_active_recomputation) << ','
      << format_cell(metrics.r_pertinence) << ','
      << format_cell(metrics.r_appropriateness) << ','
      << format_cell(metrics.a_pertinence) << ','
      << format_cell(metrics.a_appropriateness) << ','
      << format_cell(metrics.re_pertinence) << ','
      << format_cell(metrics.re_appropriateness) << '\n';
  return out.str();
}

std::string type_percentages_csv(const DistributionReport& distributions) {
  std::ostringstream out;
  out << "kind,dimension,class,count,percent\n";
  char buffer[40];
  for (const auto& row : distributions.type_percentages) {
    std::snprintf(buffer, sizeof(buffer), "%.12g", row.percent);
    out << row.kind << ',' << row.dimension << ',' << row.label << ','
        << row.count << ',' << buffer << '\n';
  }
  return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& payload,
                bool force) {
  if (!force && std::filesystem::exists(path)) {
    throw IoError("refusing to overwrite " + path.string() +
                  " (pass --force to replace prior runs)");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << payload;
  if (!out) throw IoError("failed while writing " + path.string());
}

}  // namespace

std::string report_to_json_string(const CorpusAnalysis& analysis) {
  return report_json(analysis).dump(2) + "\n";
}

std::vector<std::filesystem::path> write_report(const CorpusAnalysis& analysis,
                                                const std::filesystem::path& dir,
                                                const WriteOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  if (options.format != ReportFormat::Tabular) {
    const auto path = dir / "report.json";
    write_file(path, report_to_json_string(analysis), options.force);
    written.push_back(path);
  }
  if (options.format != ReportFormat::Structured) {
    const auto metrics_path = dir / "metrics.csv";
    write_file(metrics_path, metrics_csv(analysis.metrics), options.force);
    written.push_back(metrics_path);
    const auto types_path = dir / "type_percentages.csv";
    write_file(types_path, type_percentages_csv(analysis.distributions),
               options.force);
    written.push_back(types_path);
  }
  return written;
}

std::string compare_report_files(const std::filesystem::path& left,
                                 const std::filesystem::path& right) {
  auto load = [](const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open report: " + path.string());
    ordered_json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw IoError(path.string() + ": not a structured report: " + e.what());
    }
    if (!j.contains("corpus") || !j["corpus"].contains("metrics")) {
      throw IoError(path.string() + ": missing corpus metrics");
    }
    return j;
  };
  const ordered_json a = load(left);
  const ordered_json b = load(right);
  const auto& metrics_a = a["corpus"]["metrics"];
  const auto& metrics_b = b["corpus"]["metrics"];

  ordered_json deltas;
  for (auto it = metrics_a.begin(); it != metrics_a.end(); ++it) {
    const auto& name = it.key();
    ordered_json entry;
    entry["left"] = it.value();
    entry["right"] =
        metrics_b.contains(name) ? metrics_b[name] : ordered_json(nullptr);
    if (it.value().is_number() && entry["right"].is_number()) {
      entry["delta"] =
          entry["right"].get<double>() - it.value().get<double>();
    } else {
      entry["delta"] = nullptr;
    }
    deltas[name] = std::move(entry);
  }
  ordered_json out;
  out["left"] = left.string();
  out["right"] = right.string();
  out["metrics"] = std::move(deltas);
  return out.dump(2) + "\n";
}

}  // namespace increval
