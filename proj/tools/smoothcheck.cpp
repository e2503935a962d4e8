// Command-line front end: check one ideal file or a corpus directory.

#include <iostream>

#include "CLI11.hpp"
#include "cli/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Chart-parallel smoothness checker for varieties over prime fields"};

  std::string input;
  std::string corpus;
  std::string mode_text;
  cli::CheckOptions opts;
  std::string trace_path;

  app.add_option("--input", input, "ideal file to check");
  app.add_option("--corpus", corpus,
                 "directory of .ideal files with .expected sidecars");
  app.add_option("--mode", mode_text,
                 "chart mode: affine|projective|cone (default: from file)");
  app.add_option("--codim-limit", opts.codim_limit,
                 "switch to the embedded Jacobian at this codimension")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--threads", opts.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opts.seed, "scheduling shuffle seed");
  app.add_option("--trace", trace_path, "write firing events (JSON lines)");
  app.add_option("--budget", opts.budget,
                 "per-task reduction budget for the Groebner engine");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!mode_text.empty()) {
      opts.mode = cli::parse_mode(mode_text);
      if (!opts.mode) {
        std::cerr << "unknown mode: " << mode_text << "\n";
        return 2;
      }
    }
    if (!trace_path.empty()) opts.trace_path = trace_path;

    if (!corpus.empty()) {
      return cli::run_corpus(corpus, opts, std::cout);
    }
    if (input.empty()) {
      std::cerr << "one of --input or --corpus is required\n";
      return 2;
    }
    cli::IdealFile file = cli::IdealFile::load(input);
    cli::CheckReport report = cli::run_check(file, opts);
    std::cout << report.json.dump(2) << "\n";
    return report.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
