#include "executor/smoothness_run.hpp"

#include "groebner/predicates.hpp"

namespace executor {

using petrinet::chart_of;
using petrinet::chart_token;
using petrinet::PortValues;
using petrinet::Value;
using petrinet::verdict_token;
using smoothness::ChartTriple;
using smoothness::Verdict;

void ChartLog::note_processed(const ChartTriple& t) {
  std::lock_guard<std::mutex> lock(mu_);
  processed_.push_back(t);
}

void ChartLog::note_descent(const ChartTriple& parent,
                            const std::vector<ChartTriple>& children) {
  std::lock_guard<std::mutex> lock(mu_);
  descents_.emplace_back(parent, children);
}

void ChartLog::warn(const std::string& message) {
  std::lock_guard<std::mutex> lock(mu_);
  warnings_.push_back(message);
}

std::vector<ChartTriple> ChartLog::processed() const {
  std::lock_guard<std::mutex> lock(mu_);
  return processed_;
}

std::vector<std::pair<ChartTriple, std::vector<ChartTriple>>>
ChartLog::descents() const {
  std::lock_guard<std::mutex> lock(mu_);
  return descents_;
}

std::vector<std::string> ChartLog::warnings() const {
  std::lock_guard<std::mutex> lock(mu_);
  return warnings_;
}

TaskRegistry smoothness_task_registry(int codim_limit, ChartLog* log) {
  TaskRegistry reg;

  reg["classify"] = [codim_limit, log](const PortValues& in) -> PortValues {
    const Value& token = in.at("c");
    auto triple = chart_of(token);
    if (log) log->note_processed(*triple);
    std::int64_t route;
    if (triple->x_ideal.is_unit_ideal()) {
      if (log)
        log->warn("chart " + triple->id +
                  ": target ideal is the unit ideal (empty chart), "
                  "treated as smooth");
      route = 0;
    } else {
      auto codim = smoothness::localized_codimension(*triple);
      if (!codim || *codim == 0)
        route = 0;
      else
        route = *codim <= codim_limit ? 1 : 2;
    }
    return {{"r", Value::record({{"triple", token},
                                 {"route", Value::integer(route)}})}};
  };

  reg["delta_check"] = [](const PortValues& in) -> PortValues {
    const Value& token = in.at("r").field("triple");
    bool ok = smoothness::delta_check(*chart_of(token));
    return {{"res", Value::record({{"triple", token},
                                   {"ok", Value::boolean(ok)}})}};
  };

  reg["embedded_jacobian"] = [](const PortValues& in) -> PortValues {
    const Value& token = in.at("r").field("triple");
    bool ok = smoothness::embedded_jacobian(*chart_of(token));
    return {{"res", Value::record({{"triple", token},
                                   {"ok", Value::boolean(ok)}})}};
  };

  reg["descent"] = [log](const PortValues& in) -> PortValues {
    const Value& token = in.at("res").field("triple");
    auto triple = chart_of(token);
    std::vector<ChartTriple> children = smoothness::descent(*triple);
    if (log) log->note_descent(*triple, children);
    Value::List items;
    items.reserve(children.size());
    for (auto& child : children)
      items.push_back(chart_token(
          std::make_shared<const ChartTriple>(std::move(child))));
    return {{"lst", Value::list(std::move(items))}};
  };

  reg["certify_singular"] = [](const PortValues& in) -> PortValues {
    const Value& token = in.at("res").field("triple");
    auto verdict = std::make_shared<Verdict>();
    verdict->smooth = false;
    verdict->witness = *chart_of(token);
    return {{"v", verdict_token(std::move(verdict))}};
  };

  return reg;
}

RunResult run_smoothness_net(const std::vector<ChartTriple>& charts,
                             int codim_limit, const RunConfig& cfg,
                             RunHandle* handle) {
  petrinet::NetDef net = petrinet::build_smoothness_net(codim_limit);
  ChartLog log;
  TaskRegistry registry = smoothness_task_registry(codim_limit, &log);

  petrinet::Marking initial;
  for (const auto& chart : charts)
    initial.add(net, "i",
                chart_token(std::make_shared<const ChartTriple>(chart)));

  RunConfig engine_cfg = cfg;
  engine_cfg.quiescence_place = "o";
  engine_cfg.quiescence_value = [] {
    auto v = std::make_shared<Verdict>();
    v->smooth = true;
    return verdict_token(std::move(v));
  };

  RunResult out;
  out.exec = run(net, initial, registry, engine_cfg, handle);
  out.firings = out.exec.firings;
  out.cancelled_tasks = out.exec.cancelled_tasks;
  out.wall_seconds = out.exec.wall_seconds;
  out.chart_tree = log.processed();
  out.descents = log.descents();

  if (out.exec.output && !out.exec.error) {
    Verdict v = *petrinet::verdict_of(out.exec.output->value);
    v.charts_processed = out.chart_tree.size();
    v.warnings = log.warnings();
    out.verdict = std::move(v);
  }
  return out;
}

}  // namespace executor
