#include "increval.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "increval/analysis.hpp"
#include "increval/chart_io.hpp"
#include "increval/fixture.hpp"
#include "increval/report_io.hpp"
#include "increval/simulate.hpp"
#include "increval/version.hpp"

struct increval_corpus {
  std::vector<increval::IncrementalChart> charts;
  std::string warnings;
};

struct increval_report {
  increval::CorpusAnalysis analysis;
};

namespace {

thread_local std::string g_last_error;

increval_status fail(increval_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
increval_status guarded(Fn&& fn) noexcept {
  try {
    return fn();
  } catch (const increval::ChartFormatError& e) {
    return fail(INCREVAL_ERR_VALIDATION, e.what());
  } catch (const increval::ConfigError& e) {
    return fail(INCREVAL_ERR_CONFIG, e.what());
  } catch (const increval::IoError& e) {
    return fail(INCREVAL_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(INCREVAL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(INCREVAL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(INCREVAL_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& value) {
  char* out = static_cast<char*>(std::malloc(value.size() + 1));
  if (out != nullptr) std::memcpy(out, value.c_str(), value.size() + 1);
  return out;
}

std::string join_warnings(const std::vector<std::string>& warnings) {
  std::string joined;
  for (std::size_t i = 0; i < warnings.size(); ++i) {
    if (i > 0) joined += '\n';
    joined += warnings[i];
  }
  return joined;
}

increval::AnalyzeOptions parse_analyze_params(
    const increval_analyze_params* params) {
  increval::AnalyzeOptions options;
  if (params == nullptr) return options;
  if (params->target != nullptr) {
    const std::string target = params->target;
    if (target == "gold") {
      options.target.mode = increval::TargetMode::GoldIncrementalised;
    } else if (target == "silver") {
      options.target.mode = increval::TargetMode::Silver;
    } else if (target == "genuine") {
      options.target.mode = increval::TargetMode::GenuineIncremental;
    } else {
      throw std::invalid_argument("unknown target mode: " + target);
    }
  }
  if (params->correctness != nullptr) {
    const std::string correctness = params->correctness;
    if (correctness == "exact") {
      options.target.correctness = increval::CorrectnessRule::BinaryExact;
    } else if (correctness == "accuracy") {
      options.target.correctness = increval::CorrectnessRule::AccuracyThreshold;
      options.target.accuracy_threshold = params->accuracy_threshold;
      if (params->accuracy_threshold <= 0.0 ||
          params->accuracy_threshold > 1.0) {
        throw std::invalid_argument("accuracy threshold must be in (0,1]");
      }
    } else {
      throw std::invalid_argument("unknown correctness rule: " + correctness);
    }
  }
  if (params->distance != 0) {
    if (params->distance < 1) {
      throw std::invalid_argument("distance must be >= 1");
    }
    options.distance_param = params->distance;
  }
  if (params->bins != 0) {
    if (params->bins < 1) throw std::invalid_argument("bins must be >= 1");
    options.bins = params->bins;
  }
  if (params->cost_model != nullptr) {
    const std::string model = params->cost_model;
    if (model == "quadratic") {
      options.cost_model = increval::CostModel::Quadratic;
    } else if (model == "linear") {
      options.cost_model = increval::CostModel::Linear;
    } else {
      throw std::invalid_argument("unknown cost model: " + model);
    }
  }
  return options;
}

increval::ReportFormat parse_format(const char* format) {
  if (format == nullptr) return increval::ReportFormat::Both;
  const std::string name = format;
  if (name == "structured") return increval::ReportFormat::Structured;
  if (name == "tabular") return increval::ReportFormat::Tabular;
  if (name == "both") return increval::ReportFormat::Both;
  throw std::invalid_argument("unknown report format: " + name);
}

}  // namespace

extern "C" {

const char* increval_version(void) { return increval::kVersion; }

const char* increval_last_error(void) { return g_last_error.c_str(); }

increval_status increval_corpus_read(const char* path, int strict,
                                     increval_corpus** out) {
  return guarded([&]() -> increval_status {
    if (path == nullptr || out == nullptr) {
      throw std::invalid_argument("path and out must not be null");
    }
    increval::ReadResult result =
        increval::read_charts(path, {.strict = strict != 0});
    auto* corpus = new increval_corpus;
    corpus->charts = std::move(result.charts);
    corpus->warnings = join_warnings(result.warnings);
    *out = corpus;
    return INCREVAL_OK;
  });
}

increval_status increval_corpus_write(const increval_corpus* corpus,
                                      const char* path) {
  return guarded([&]() -> increval_status {
    if (corpus == nullptr || path == nullptr) {
      throw std::invalid_argument("corpus and path must not be null");
    }
    increval::write_charts(corpus->charts, path);
    return INCREVAL_OK;
  });
}

increval_status increval_corpus_to_jsonl(const increval_corpus* corpus,
                                         char** out) {
  return guarded([&]() -> increval_status {
    if (corpus == nullptr || out == nullptr) {
      throw std::invalid_argument("corpus and out must not be null");
    }
    *out = copy_string(increval::charts_to_jsonl(corpus->charts));
    if (*out == nullptr) throw std::bad_alloc();
    return INCREVAL_OK;
  });
}

increval_status increval_corpus_fixture(increval_corpus** out) {
  return guarded([&]() -> increval_status {
    if (out == nullptr) throw std::invalid_argument("out must not be null");
    auto* corpus = new increval_corpus;
    corpus->charts.push_back(increval::builtin_fixture());
    *out = corpus;
    return INCREVAL_OK;
  });
}

size_t increval_corpus_size(const increval_corpus* corpus) {
  return corpus == nullptr ? 0 : corpus->charts.size();
}

const char* increval_corpus_warnings(const increval_corpus* corpus) {
  return corpus == nullptr ? "" : corpus->warnings.c_str();
}

void increval_corpus_free(increval_corpus* corpus) { delete corpus; }

increval_status increval_simulate(const increval_sim_params* params,
                                  increval_corpus** out) {
  return guarded([&]() -> increval_status {
    if (params == nullptr || out == nullptr) {
      throw std::invalid_argument("params and out must not be null");
    }
    increval::SimulationBatchParams batch;
    batch.n = params->n;
    batch.vocab_size = params->vocab_size;
    batch.ambiguity = params->ambiguity;
    batch.max_offset = params->max_offset;
    batch.noise = params->noise;
    if (params->policy != nullptr) {
      batch.policy.kind = increval::policy_kind_from_string(params->policy);
    }
    batch.policy.k = params->k;
    batch.policy.q = params->q;
    batch.policy.window = params->window;
    batch.policy.threshold = params->threshold;
    batch.seed = params->seed;
    batch.count = params->count;
    auto charts = increval::simulate_batch(batch);
    auto* corpus = new increval_corpus;
    corpus->charts = std::move(charts);
    *out = corpus;
    return INCREVAL_OK;
  });
}

increval_status increval_analyze(const increval_corpus* corpus,
                                 const increval_analyze_params* params,
                                 increval_report** out) {
  return guarded([&]() -> increval_status {
    if (corpus == nullptr || out == nullptr) {
      throw std::invalid_argument("corpus and out must not be null");
    }
    const auto options = parse_analyze_params(params);
    auto analysis = increval::analyze_corpus(corpus->charts, options);
    auto* report = new increval_report;
    report->analysis = std::move(analysis);
    *out = report;
    return INCREVAL_OK;
  });
}

increval_status increval_report_write(const increval_report* report,
                                      const char* out_dir, const char* format,
                                      int force) {
  return guarded([&]() -> increval_status {
    if (report == nullptr || out_dir == nullptr) {
      throw std::invalid_argument("report and out_dir must not be null");
    }
    increval::WriteOptions options;
    options.format = parse_format(format);
    options.force = force != 0;
    increval::write_report(report->analysis, out_dir, options);
    return INCREVAL_OK;
  });
}

increval_status increval_report_to_json(const increval_report* report,
                                        char** out) {
  return guarded([&]() -> increval_status {
    if (report == nullptr || out == nullptr) {
      throw std::invalid_argument("report and out must not be null");
    }
    *out = copy_string(increval::report_to_json_string(report->analysis));
    if (*out == nullptr) throw std::bad_alloc();
    return INCREVAL_OK;
  });
}

void increval_report_free(increval_report* report) { delete report; }

increval_status increval_compare_reports(const char* left_path,
                                         const char* right_path, char** out) {
  return guarded([&]() -> increval_status {
    if (left_path == nullptr || right_path == nullptr || out == nullptr) {
      throw std::invalid_argument("paths and out must not be null");
    }
    *out = copy_string(increval::compare_report_files(left_path, right_path));
    if (*out == nullptr) throw std::bad_alloc();
    return INCREVAL_OK;
  });
}

void increval_string_free(char* str) { std::free(str); }

}  // extern "C"
