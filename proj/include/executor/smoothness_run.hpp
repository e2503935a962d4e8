#pragma once

#include <mutex>

#include "executor/run.hpp"
#include "petrinet/smoothness_net.hpp"
#include "smoothness/smoothness_test.hpp"

namespace executor {

/// Thread-safe record of charts seen by the net's task bodies: every
/// classified chart, every descent with its children, and warnings.
class ChartLog {
 public:
  void note_processed(const smoothness::ChartTriple& t);
  void note_descent(const smoothness::ChartTriple& parent,
                    const std::vector<smoothness::ChartTriple>& children);
  void warn(const std::string& message);

  std::vector<smoothness::ChartTriple> processed() const;
  std::vector<std::pair<smoothness::ChartTriple,
                        std::vector<smoothness::ChartTriple>>>
  descents() const;
  std::vector<std::string> warnings() const;

 private:
  mutable std::mutex mu_;
  std::vector<smoothness::ChartTriple> processed_;
  std::vector<std::pair<smoothness::ChartTriple,
                        std::vector<smoothness::ChartTriple>>>
      descents_;
  std::vector<std::string> warnings_;
};

/// Task bodies for the smoothness net: classify / delta_check /
/// embedded_jacobian / descent / certify_singular. The codimension limit
/// must match the one the net was built with; `log` may be null.
TaskRegistry smoothness_task_registry(int codim_limit, ChartLog* log);

/// Result of one net-driven smoothness check.
struct RunResult {
  std::optional<smoothness::Verdict> verdict;  // absent on error/abort
  std::uint64_t firings = 0;
  std::uint64_t cancelled_tasks = 0;
  double wall_seconds = 0.0;
  std::vector<smoothness::ChartTriple> chart_tree;  // forest via parent_id
  std::vector<std::pair<smoothness::ChartTriple,
                        std::vector<smoothness::ChartTriple>>>
      descents;  // for post-hoc soundness checks
  ExecResult exec;
};

/// Builds the net and registry for `codim_limit`, seeds place "i" with
/// the given charts, runs, and reads the verdict off place "o" (or the
/// quiescence rule when no singularity was found).
RunResult run_smoothness_net(const std::vector<smoothness::ChartTriple>& charts,
                             int codim_limit, const RunConfig& cfg,
                             RunHandle* handle = nullptr);

}  // namespace executor
