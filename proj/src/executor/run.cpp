#include "executor/run.hpp"

#include <chrono>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <random>
#include <thread>

#include "groebner/budget.hpp"

namespace executor {

using petrinet::Binding;
using petrinet::Marking;
using petrinet::NetDef;
using petrinet::PortValues;
using petrinet::Token;
using petrinet::Transition;

namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

struct WorkItem {
  std::uint64_t seq = 0;
  const Transition* transition = nullptr;
  PortValues inputs;
  std::vector<std::uint64_t> consumed;
  Clock::time_point dispatched;
};

struct Completion {
  enum class Status { ok, cancelled, budget, failed };
  WorkItem item;
  PortValues outputs;
  Status status = Status::ok;
  std::string what;
};

// Worker pool with a shared queue; completions flow back over a second
// queue the coordinator blocks on.
class Pool {
 public:
  Pool(unsigned n, const TaskRegistry& registry,
       std::uint64_t budget_reductions, std::atomic<bool>* cancel)
      : registry_(registry),
        budget_reductions_(budget_reductions),
        cancel_(cancel) {
    for (unsigned i = 0; i < n; ++i)
      threads_.emplace_back([this] { worker_loop(); });
  }

  ~Pool() {
    {
      std::lock_guard<std::mutex> lock(mu_);
      shutdown_ = true;
    }
    work_cv_.notify_all();
    for (auto& t : threads_) t.join();
  }

  void dispatch(WorkItem item) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      work_.push_back(std::move(item));
    }
    work_cv_.notify_one();
  }

  Completion wait_completion() {
    std::unique_lock<std::mutex> lock(mu_);
    done_cv_.wait(lock, [this] { return !done_.empty(); });
    Completion c = std::move(done_.front());
    done_.pop_front();
    return c;
  }

 private:
  void worker_loop() {
    while (true) {
      WorkItem item;
      {
        std::unique_lock<std::mutex> lock(mu_);
        work_cv_.wait(lock, [this] { return shutdown_ || !work_.empty(); });
        if (work_.empty()) {
          if (shutdown_) return;
          continue;
        }
        item = std::move(work_.front());
        work_.pop_front();
      }
      Completion c;
      c.item = std::move(item);
      try {
        auto it = registry_.find(c.item.transition->task_kind);
        if (it == registry_.end())
          throw std::runtime_error("no task body registered for kind '" +
                                   c.item.transition->task_kind + "'");
        groebner::Budget budget;
        budget.max_reductions = budget_reductions_;
        budget.cancel = cancel_;
        groebner::BudgetScope scope(budget);
        c.outputs = it->second(c.item.inputs);
        c.status = Completion::Status::ok;
      } catch (const groebner::task_cancelled&) {
        c.status = Completion::Status::cancelled;
      } catch (const groebner::budget_exhausted& e) {
        c.status = Completion::Status::budget;
        c.what = e.what();
      } catch (const std::exception& e) {
        c.status = Completion::Status::failed;
        c.what = e.what();
      }
      {
        std::lock_guard<std::mutex> lock(mu_);
        done_.push_back(std::move(c));
      }
      done_cv_.notify_one();
    }
  }

  const TaskRegistry& registry_;
  std::uint64_t budget_reductions_;
  std::atomic<bool>* cancel_;
  std::mutex mu_;
  std::condition_variable work_cv_, done_cv_;
  std::deque<WorkItem> work_;
  std::deque<Completion> done_;
  bool shutdown_ = false;
  std::vector<std::thread> threads_;
};

}  // namespace

ExecResult run(const NetDef& net, const Marking& initial,
               const TaskRegistry& registry, const RunConfig& cfg,
               RunHandle* handle) {
  if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
  {
    auto errors = petrinet::validate_net(net);
    if (!errors.empty()) {
      std::string msg = "net validation failed:";
      for (const auto& e : errors) msg += "\n  " + e;
      throw std::invalid_argument(msg);
    }
  }

  ExecResult result;
  Marking marking = initial;
  std::mt19937_64 rng(cfg.seed);
  std::atomic<bool> cancel{false};
  Pool pool(cfg.workers, registry, cfg.budget_max_reductions, &cancel);

  const std::string output_place = net.heureka_place.value_or(
      cfg.quiescence_place.value_or(std::string()));

  std::uint64_t seq = 0;
  unsigned inflight = 0;
  bool stopping = false;
  std::string panic;
  Clock::time_point started = Clock::now();

  auto record = [&](const std::string& transition,
                    std::vector<std::uint64_t> consumed,
                    std::vector<std::uint64_t> produced, double wall_ms) {
    FiringRecord fr{++seq, transition, std::move(consumed),
                    std::move(produced), wall_ms};
    if (cfg.trace_sink) {
      nlohmann::json j{{"seq", fr.seq},
                       {"transition", fr.transition},
                       {"consumed", fr.consumed},
                       {"produced", fr.produced},
                       {"wall_ms", fr.wall_ms}};
      (*cfg.trace_sink) << j.dump() << "\n";
    }
    result.trace.push_back(std::move(fr));
  };

  // Heureka: stop dispatching, cancel in-flight work, drain everything
  // except the output place.
  auto trigger_stop = [&](bool from_output_token) {
    if (stopping) return;
    stopping = true;
    cancel.store(true, std::memory_order_relaxed);
    std::vector<std::uint64_t> drained;
    if (!output_place.empty())
      drained = marking.drain_except(output_place);
    else
      drained = marking.drain_except("");
    if (!drained.empty() || from_output_token)
      record("@heureka", std::move(drained), {}, 0.0);
    result.heureka = from_output_token;
  };

  auto produced_hits_output =
      [&](const Transition& t) {
        if (output_place.empty()) return false;
        for (const auto& p : t.out_ports)
          if (p.place == output_place) return true;
        return false;
      };

  while (true) {
    if (handle && handle->requested() && !stopping) trigger_stop(false);

    bool progressed = false;
    if (!stopping) {
      auto bindings = petrinet::enabled_bindings(net, marking);
      std::shuffle(bindings.begin(), bindings.end(), rng);
      for (const auto& b : bindings) {
        const Transition* t = net.find_transition(b.transition);
        if (t->body == petrinet::BodyKind::expression) {
          Clock::time_point t0 = Clock::now();
          PortValues inputs = b.values();
          petrinet::consume(marking, net, b);
          PortValues outputs = petrinet::eval_body(*t, inputs);
          auto produced = petrinet::produce(marking, net, *t, outputs);
          record(t->id, b.token_ids(), produced,
                 ms_between(t0, Clock::now()));
          ++result.firings;
          if (produced_hits_output(*t)) trigger_stop(true);
          progressed = true;
          break;
        }
        if (inflight < cfg.workers) {
          // Several task bindings from one enumeration may be disjoint;
          // dispatch as many as there are idle workers, skipping any
          // whose tokens an earlier dispatch already took.
          try {
            petrinet::consume(marking, net, b);
          } catch (const petrinet::stale_binding&) {
            continue;
          }
          WorkItem item;
          item.transition = t;
          item.inputs = b.values();
          item.consumed = b.token_ids();
          item.dispatched = Clock::now();
          pool.dispatch(std::move(item));
          ++inflight;
          progressed = true;
        }
      }
    }
    if (progressed) continue;

    if (inflight > 0) {
      Completion c = pool.wait_completion();
      --inflight;
      // Tokens consumed at dispatch that never produce anything are
      // recorded as cancellations so traces stay account-complete.
      auto record_cancelled = [&] {
        ++result.cancelled_tasks;
        record("@cancelled", c.item.consumed, {},
               ms_between(c.item.dispatched, Clock::now()));
      };
      if (stopping) {
        record_cancelled();
        continue;
      }
      switch (c.status) {
        case Completion::Status::ok: {
          auto produced =
              petrinet::produce(marking, net, *c.item.transition, c.outputs);
          record(c.item.transition->id, c.item.consumed, produced,
                 ms_between(c.item.dispatched, Clock::now()));
          ++result.firings;
          if (produced_hits_output(*c.item.transition)) trigger_stop(true);
          break;
        }
        case Completion::Status::cancelled:
          record_cancelled();
          break;
        case Completion::Status::budget:
          record_cancelled();
          result.error = "task '" + c.item.transition->id +
                         "' exhausted its computation budget";
          trigger_stop(false);
          break;
        case Completion::Status::failed:
          record_cancelled();
          panic = "task '" + c.item.transition->id +
                  "' failed: " + c.what;
          trigger_stop(false);
          break;
      }
      continue;
    }
    break;  // nothing enabled, nothing in flight
  }

  if (!panic.empty()) throw std::runtime_error(panic);

  if (!stopping) {
    result.quiesced = true;
    if (cfg.quiescence_place && cfg.quiescence_value &&
        marking.at(*cfg.quiescence_place).empty()) {
      std::uint64_t id =
          marking.add(net, *cfg.quiescence_place, cfg.quiescence_value());
      record("@quiescence", {}, {id}, 0.0);
    }
  } else if (!result.heureka && !result.error) {
    result.aborted = true;
  }

  if (!output_place.empty()) {
    const auto& toks = marking.at(output_place);
    if (!toks.empty()) result.output = toks.front();
  }
  result.final_marking = marking;
  result.wall_seconds =
      std::chrono::duration<double>(Clock::now() - started).count();

  if (cfg.trace_sink) {
    nlohmann::json j{{"summary",
                      {{"firings", result.firings},
                       {"cancelled_tasks", result.cancelled_tasks},
                       {"wall_seconds", result.wall_seconds},
                       {"workers", cfg.workers}}}};
    (*cfg.trace_sink) << j.dump() << "\n";
  }
  return result;
}

}  // namespace executor
