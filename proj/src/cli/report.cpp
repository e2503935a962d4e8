#include "cli/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>

namespace cli {

namespace {

nlohmann::json chart_json(const smoothness::ChartTriple& c) {
  nlohmann::json j;
  j["id"] = c.id;
  j["parent"] = c.parent_id;
  j["depth"] = c.depth;
  nlohmann::json w = nlohmann::json::array();
  for (const auto& g : c.w_ideal.gens()) w.push_back(g.to_string());
  j["ambient_generators"] = w;
  nlohmann::json x = nlohmann::json::array();
  for (const auto& g : c.x_ideal.gens()) x.push_back(g.to_string());
  j["target_generators"] = x;
  j["q"] = c.q.to_string();
  return j;
}

}  // namespace

CheckReport run_check(const IdealFile& file, const CheckOptions& opts) {
  polyalg::Ring ring = file.ring();
  groebner::Ideal ideal = file.ideal(ring);
  smoothness::ChartMode mode = opts.mode.value_or(
      file.mode.value_or(smoothness::ChartMode::affine));

  std::vector<smoothness::ChartTriple> charts;
  try {
    charts = smoothness::chart_decompose(ideal, mode);
  } catch (const std::invalid_argument& e) {
    throw file_error(file.source + ": " + e.what());
  }

  executor::RunConfig cfg;
  cfg.workers = std::max(1u, opts.threads);
  cfg.seed = opts.seed;
  cfg.budget_max_reductions = opts.budget;
  std::ofstream trace_file;
  if (opts.trace_path) {
    trace_file.open(*opts.trace_path);
    if (!trace_file.good())
      throw file_error("cannot open trace file: " + *opts.trace_path);
    cfg.trace_sink = &trace_file;
  }

  executor::RunResult run = executor::run_smoothness_net(
      charts, opts.codim_limit, cfg);
  if (run.exec.error) throw std::runtime_error(*run.exec.error);
  if (!run.verdict) throw std::runtime_error("run ended without a verdict");

  CheckReport report;
  report.verdict = *run.verdict;
  report.exit_code = report.verdict.smooth ? 0 : 1;

  nlohmann::json j;
  j["input"] = {{"file", file.source},
                {"characteristic", file.characteristic},
                {"variables", file.variables},
                {"generators", file.generator_text},
                {"mode", mode_name(mode)},
                {"assumed_equidimensional", file.assume_equidimensional},
                {"assumed_radical", file.assume_radical}};
  j["options"] = {{"codim_limit", opts.codim_limit},
                  {"threads", cfg.workers},
                  {"seed", cfg.seed},
                  {"budget", cfg.budget_max_reductions}};
  nlohmann::json v;
  v["smooth"] = report.verdict.smooth;
  v["witness"] = report.verdict.witness
                     ? chart_json(*report.verdict.witness)
                     : nlohmann::json(nullptr);
  v["charts_processed"] = report.verdict.charts_processed;
  v["warnings"] = report.verdict.warnings;
  j["verdict"] = v;

  // Chart tree, sorted by id: deterministic for smooth runs, best-effort
  // under early termination.
  std::vector<smoothness::ChartTriple> tree = run.chart_tree;
  std::sort(tree.begin(), tree.end(),
            [](const smoothness::ChartTriple& a,
               const smoothness::ChartTriple& b) { return a.id < b.id; });
  nlohmann::json charts_j = nlohmann::json::array();
  for (const auto& c : tree) charts_j.push_back(chart_json(c));
  j["charts"] = charts_j;

  j["timings"] = {{"wall_seconds", run.wall_seconds},
                  {"firings", run.firings},
                  {"cancelled_tasks", run.cancelled_tasks}};
  report.json = std::move(j);
  return report;
}

int run_corpus(const std::string& dir, const CheckOptions& opts,
               std::ostream& out) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw file_error("corpus directory does not exist: " + dir);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".ideal") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw file_error("corpus directory holds no .ideal files: " + dir);

  int mismatches = 0;
  for (const auto& path : files) {
    fs::path sidecar = path;
    sidecar.replace_extension(".expected");
    std::ifstream exp(sidecar);
    if (!exp.good())
      throw file_error("missing expected-verdict sidecar: " +
                       sidecar.string());
    std::string expected;
    exp >> expected;
    if (expected != "smooth" && expected != "singular")
      throw file_error(sidecar.string() +
                       ": expected verdict must be 'smooth' or 'singular'");

    IdealFile f = IdealFile::load(path.string());
    auto t0 = std::chrono::steady_clock::now();
    CheckReport report = run_check(f, opts);
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    std::string got = report.verdict.smooth ? "smooth" : "singular";
    bool pass = got == expected;
    if (!pass) ++mismatches;
    out << std::left << std::setw(28) << path.stem().string() << " "
        << std::setw(9) << got << " expected " << std::setw(9) << expected
        << (pass ? " PASS" : " FAIL") << "  (" << std::fixed
        << std::setprecision(3) << secs << "s, "
        << report.verdict.charts_processed << " charts)\n";
  }
  out << (mismatches == 0 ? "all verdicts match\n"
                          : std::to_string(mismatches) + " mismatches\n");
  return mismatches == 0 ? 0 : 1;
}

}  // namespace cli
