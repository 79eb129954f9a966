// Command-line front end. Talks to the engine exclusively through the C API
// in increval.h.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "increval.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CorpusDeleter {
  void operator()(increval_corpus* corpus) const { increval_corpus_free(corpus); }
};
struct ReportDeleter {
  void operator()(increval_report* report) const { increval_report_free(report); }
};
using CorpusPtr = std::unique_ptr<increval_corpus, CorpusDeleter>;
using ReportPtr = std::unique_ptr<increval_report, ReportDeleter>;

int report_error(increval_status status) {
  std::cerr << "error: " << increval_last_error() << '\n';
  return status == INCREVAL_ERR_INVALID_ARGUMENT ? kExitUsage : kExitFailure;
}

void print_warnings(const increval_corpus* corpus) {
  const std::string warnings = increval_corpus_warnings(corpus);
  if (!warnings.empty()) {
    std::cerr << "warning: skipped malformed records:\n" << warnings << '\n';
  }
}

struct AnalyzeArgs {
  std::string charts;
  std::string target = "gold";
  std::string correctness = "exact";
  double tau = 1.0;
  int distance = 0;  // 0 = default (2), unless INCREVAL_DISTANCE overrides
  int bins = 10;
  std::string out = "increval-out";
  std::string format = "both";
  std::string cost_model = "quadratic";
  bool strict = false;
  bool force = false;
};

int run_analyze(const AnalyzeArgs& args, bool distance_given) {
  int distance = args.distance;
  if (!distance_given) {
    if (const char* env = std::getenv("INCREVAL_DISTANCE")) {
      char* end = nullptr;
      const long value = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || value < 1) {
        std::cerr << "error: INCREVAL_DISTANCE must be a positive integer, got '"
                  << env << "'\n";
        return kExitUsage;
      }
      distance = static_cast<int>(value);
    }
  }

  increval_corpus* raw_corpus = nullptr;
  increval_status status =
      increval_corpus_read(args.charts.c_str(), args.strict ? 1 : 0, &raw_corpus);
  if (status != INCREVAL_OK) return report_error(status);
  CorpusPtr corpus(raw_corpus);
  print_warnings(corpus.get());
  if (increval_corpus_size(corpus.get()) == 0) {
    std::cerr << "warning: no charts in " << args.charts << '\n';
  }

  increval_analyze_params params = {};
  params.target = args.target.c_str();
  params.correctness = args.correctness.c_str();
  params.accuracy_threshold = args.tau;
  params.distance = distance;
  params.bins = args.bins;
  params.cost_model = args.cost_model.c_str();

  increval_report* raw_report = nullptr;
  status = increval_analyze(corpus.get(), &params, &raw_report);
  if (status != INCREVAL_OK) return report_error(status);
  ReportPtr report(raw_report);

  status = increval_report_write(report.get(), args.out.c_str(),
                                 args.format.c_str(), args.force ? 1 : 0);
  if (status != INCREVAL_OK) return report_error(status);
  std::cerr << "report written to " << args.out << '\n';
  return 0;
}

struct SimulateArgs {
  int n = 10;
  int vocab_size = 4;
  double ambiguity = 0.3;
  int max_offset = 3;
  double noise = 0.05;
  std::string policy = "naive-restart";
  int k = 2;
  double q = 0.5;
  int window = 3;
  double threshold = 0.5;
  unsigned long long seed = 1;
  int count = 1;
  std::string out = "-";
};

int run_simulate(const SimulateArgs& args) {
  increval_sim_params params = {};
  params.n = args.n;
  params.vocab_size = args.vocab_size;
  params.ambiguity = args.ambiguity;
  params.max_offset = args.max_offset;
  params.noise = args.noise;
  params.policy = args.policy.c_str();
  params.k = args.k;
  params.q = args.q;
  params.window = args.window;
  params.threshold = args.threshold;
  params.seed = args.seed;
  params.count = args.count;

  increval_corpus* raw_corpus = nullptr;
  increval_status status = increval_simulate(&params, &raw_corpus);
  if (status != INCREVAL_OK) return report_error(status);
  CorpusPtr corpus(raw_corpus);
  status = increval_corpus_write(corpus.get(), args.out.c_str());
  if (status != INCREVAL_OK) return report_error(status);
  return 0;
}

int run_compare(const std::string& left, const std::string& right) {
  char* deltas = nullptr;
  const increval_status status =
      increval_compare_reports(left.c_str(), right.c_str(), &deltas);
  if (status != INCREVAL_OK) return report_error(status);
  std::cout << deltas;
  increval_string_free(deltas);
  return 0;
}

int run_fixture(const std::string& out) {
  increval_corpus* raw_corpus = nullptr;
  increval_status status = increval_corpus_fixture(&raw_corpus);
  if (status != INCREVAL_OK) return report_error(status);
  CorpusPtr corpus(raw_corpus);
  status = increval_corpus_write(corpus.get(), out.c_str());
  if (status != INCREVAL_OK) return report_error(status);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"increval: evaluate revision and recomputation behaviour of "
               "incremental sequence labelling processors"};
  app.set_version_flag("--version", increval_version());
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand(
      "analyze", "Analyze a chart file and write metric reports");
  analyze->add_option("charts", analyze_args.charts, "Chart file (JSONL)")
      ->required();
  analyze->add_option("--target", analyze_args.target, "Reference prefixes")
      ->check(CLI::IsMember({"gold", "silver", "genuine"}))
      ->capture_default_str();
  analyze->add_option("--correctness", analyze_args.correctness,
                      "Prefix correctness rule")
      ->check(CLI::IsMember({"exact", "accuracy"}))
      ->capture_default_str();
  analyze->add_option("--tau", analyze_args.tau,
                      "Accuracy threshold for --correctness accuracy")
      ->check(CLI::Range(0.0, 1.0));
  auto* distance_opt =
      analyze->add_option("--distance", analyze_args.distance,
                          "Short-range horizon d (default 2; env "
                          "INCREVAL_DISTANCE)")
          ->check(CLI::PositiveNumber);
  analyze->add_option("--bins", analyze_args.bins, "Histogram bins")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_option("--out", analyze_args.out, "Output directory")
      ->capture_default_str();
  analyze->add_option("--format", analyze_args.format, "Report formats")
      ->check(CLI::IsMember({"structured", "tabular", "both"}))
      ->capture_default_str();
  analyze->add_option("--cost-model", analyze_args.cost_model,
                      "Recomputation cost model")
      ->check(CLI::IsMember({"quadratic", "linear"}))
      ->capture_default_str();
  analyze->add_flag("--strict", analyze_args.strict,
                    "Abort on the first malformed record");
  analyze->add_flag("--force", analyze_args.force,
                    "Overwrite report files from a prior run");

  SimulateArgs simulate_args;
  auto* simulate = app.add_subcommand(
      "simulate", "Generate charts from a synthetic processor");
  simulate->add_option("--n", simulate_args.n, "Sequence length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--vocab-size", simulate_args.vocab_size, "Label count")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  simulate->add_option("--ambiguity", simulate_args.ambiguity,
                       "Probability a position needs right context")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  simulate->add_option("--max-offset", simulate_args.max_offset,
                       "Maximum right-context length")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  simulate->add_option("--noise", simulate_args.noise,
                       "Per-emission label error probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  simulate->add_option("--policy", simulate_args.policy, "Recomputation policy")
      ->check(CLI::IsMember({"monotonic", "naive-restart", "every-k",
                             "bernoulli", "edit-rate"}))
      ->capture_default_str();
  simulate->add_option("--k", simulate_args.k, "Period for every-k")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--q", simulate_args.q, "Probability for bernoulli")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  simulate->add_option("--window", simulate_args.window,
                       "Window for edit-rate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--threshold", simulate_args.threshold,
                       "Threshold for edit-rate")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  simulate->add_option("--seed", simulate_args.seed, "Base seed")
      ->capture_default_str();
  simulate->add_option("--count", simulate_args.count, "Number of charts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--out", simulate_args.out,
                       "Output chart file ('-' = stdout)")
      ->capture_default_str();

  std::string compare_left, compare_right;
  auto* compare = app.add_subcommand(
      "compare", "Print per-metric deltas between two structured reports");
  compare->add_option("report1", compare_left, "Left report.json")->required();
  compare->add_option("report2", compare_right, "Right report.json")
      ->required();

  std::string fixture_out = "-";
  auto* fixture = app.add_subcommand(
      "fixture", "Emit the built-in example chart file");
  fixture->add_option("--out", fixture_out, "Output path ('-' = stdout)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cerr << "run with --help for usage\n";
    return kExitUsage;
  }

  if (analyze->parsed()) {
    return run_analyze(analyze_args, distance_opt->count() > 0);
  }
  if (simulate->parsed()) return run_simulate(simulate_args);
  if (compare->parsed()) return run_compare(compare_left, compare_right);
  if (fixture->parsed()) return run_fixture(fixture_out);
  return kExitUsage;
}
