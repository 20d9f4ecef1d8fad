#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eval.hpp"
#include "g2forge/errors.hpp"
#include "suites.hpp"

namespace {

constexpr int kUsage = 2;

bool parse_seed(const std::string& text, std::uint64_t& out) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    std::size_t pos = 0;
    out = std::stoull(text, &pos);
    return pos == text.size();
  } catch (const std::exception&) {
    return false;
  }
}

int emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(output);
  if (!f) {
    std::cerr << "error: cannot write " << output << "\n";
    return kUsage;
  }
  f << text;
  return 0;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw g2forge::ParseError("cannot read " + path);
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw g2forge::ParseError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact G2 cubic-form computations and their verification suites"};
  app.require_subcommand(1);

  std::string suite = "all";
  std::string seed_text;
  std::size_t samples = 100000;
  std::size_t randomized = 100;
  unsigned workers = 0;
  std::string format = "text";
  std::string output;
  bool timing = false;

  auto* run = app.add_subcommand("run", "run verification suites");
  run->add_option("--suite", suite, "suite to run")->check(CLI::IsMember(g2forge::cli::suite_names()));
  run->add_option("--seed", seed_text, "random seed (default: $G2FORGE_SEED, then 1)");
  run->add_option("--samples", samples, "Monte-Carlo samples per test element")->check(CLI::PositiveNumber);
  run->add_option("--randomized", randomized, "random instances per randomized identity")->check(CLI::PositiveNumber);
  run->add_option("--workers", workers, "Monte-Carlo worker threads (0: hardware concurrency)");
  run->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  run->add_option("--output", output, "write the report to a file");
  run->add_flag("--timing", timing, "include wall-clock time in the report");

  std::string op;
  std::vector<std::string> files;
  std::string eval_output;
  auto* eval = app.add_subcommand("eval", "evaluate one operation on JSON form files");
  eval->add_option("op", op, "q2 | b2 | Q | P | hat | project")
      ->required()
      ->check(CLI::IsMember(g2forge::cli::eval_operations()));
  eval->add_option("inputs", files, "JSON form files")->required();
  eval->add_option("--output", eval_output, "write the result to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (*run) {
    g2forge::cli::RunOptions opt;
    if (seed_text.empty()) {
      if (const char* env = std::getenv("G2FORGE_SEED")) {
        if (!parse_seed(env, opt.seed)) {
          std::cerr << "error: G2FORGE_SEED must be a non-negative integer, got '" << env << "'\n";
          return kUsage;
        }
      }
    } else if (!parse_seed(seed_text, opt.seed)) {
      std::cerr << "error: --seed must be a non-negative integer, got '" << seed_text << "'\n";
      return kUsage;
    }
    opt.samples = samples;
    opt.randomized = randomized;
    opt.workers = workers;
    g2forge::cli::SuiteReport report;
    try {
      report = g2forge::cli::run_suite(suite, opt);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    if (!timing) report.wall_seconds.reset();
    const std::string text =
        format == "json" ? g2forge::cli::to_json(report).dump(2) + "\n" : g2forge::cli::to_text(report);
    if (const int rc = emit(text, output)) return rc;
    return report.passed() ? 0 : 1;
  }

  try {
    std::vector<nlohmann::json> inputs;
    for (const auto& f : files) inputs.push_back(read_json_file(f));
    const auto result = g2forge::cli::evaluate(op, inputs);
    return emit(result.dump(2) + "\n", eval_output);
  } catch (const g2forge::InternalInconsistency& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const g2forge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
