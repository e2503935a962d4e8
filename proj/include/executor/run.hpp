#pragma once

#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "petrinet/semantics.hpp"

namespace executor {

/// Pure task body: in-port values to out-port values. Bodies run on
/// worker threads under an installed Groebner budget; cooperative
/// cancellation reaches them through that budget's flag.
using TaskBody =
    std::function<petrinet::PortValues(const petrinet::PortValues&)>;
using TaskRegistry = std::map<std::string, TaskBody>;

struct RunConfig {
  unsigned workers = 1;
  std::uint64_t seed = 0;
  /// Per-task reduction budget handed to the Groebner engine (0 = none).
  std::uint64_t budget_max_reductions = 50'000'000;
  /// Optional JSON-lines sink for firing events.
  std::ostream* trace_sink = nullptr;
  /// Engine-level completion rule: when the run quiesces and this place
  /// is empty, emit `quiescence_value` onto it (recorded as the
  /// synthetic firing "@quiescence").
  std::optional<std::string> quiescence_place;
  std::function<petrinet::Value()> quiescence_value;
};

struct FiringRecord {
  std::uint64_t seq = 0;
  std::string transition;
  std::vector<std::uint64_t> consumed;
  std::vector<std::uint64_t> produced;
  double wall_ms = 0.0;
};

struct ExecResult {
  petrinet::Marking final_marking;
  /// The token on the output (heureka/quiescence) place, if any.
  std::optional<petrinet::Token> output;
  std::uint64_t firings = 0;
  std::uint64_t cancelled_tasks = 0;
  double wall_seconds = 0.0;
  bool heureka = false;   // a token on the heureka place cut the run short
  bool quiesced = false;  // ended with no enabled bindings, none in flight
  bool aborted = false;   // stopped externally without an output token
  std::optional<std::string> error;  // budget exhaustion diagnostics
  std::vector<FiringRecord> trace;
};

/// External early-termination trigger; safe to call from other threads
/// and idempotent.
class RunHandle {
 public:
  void heureka() { flag_.store(true, std::memory_order_relaxed); }
  bool requested() const { return flag_.load(std::memory_order_relaxed); }

 private:
  std::atomic<bool> flag_{false};
};

/// Executes the net to quiescence or Heureka. One coordinator owns the
/// marking; task-bodied transitions run on `cfg.workers` worker threads
/// (tokens are consumed at dispatch and results merged at completion),
/// expression-bodied transitions are applied inline. Binding choice is
/// FIFO over the deterministic enumeration with seeded shuffling.
/// Throws on invalid nets, unknown task kinds, and worker panics.
ExecResult run(const petrinet::NetDef& net, const petrinet::Marking& initial,
               const TaskRegistry& registry, const RunConfig& cfg,
               RunHandle* handle = nullptr);

}  // namespace executor
