#include "doctest.h"

#include "executor/run.hpp"
#include "groebner/ideal.hpp"
#include "petrinet/library_nets.hpp"
#include "test_util.hpp"
#include "trace_replay.hpp"

using namespace executor;
using petrinet::ColorType;
using petrinet::Marking;
using petrinet::NetDef;
using petrinet::PortValues;
using petrinet::Transition;
using petrinet::Value;

namespace {

// Tiny task net: one transition doubling integers from a to b.
NetDef doubling_net() {
  NetDef net;
  net.places.push_back({"a", "a", ColorType::integer()});
  net.places.push_back({"b", "b", ColorType::integer()});
  Transition w;
  w.id = w.name = "w";
  w.body = petrinet::BodyKind::task;
  w.task_kind = "double";
  w.in_ports.push_back({"x", ColorType::integer(), "a"});
  w.out_ports.push_back({"y", ColorType::integer(), "b"});
  net.transitions.push_back(std::move(w));
  return net;
}

TaskRegistry doubling_registry() {
  TaskRegistry reg;
  reg["double"] = [](const PortValues& in) -> PortValues {
    return {{"y", Value::integer(in.at("x").as_int() * 2)}};
  };
  return reg;
}

}  // namespace

TEST_CASE("reduction nets under randomized parallel execution") {
  TaskRegistry empty_registry;

  SUBCASE("sequential variant, many seeds") {
    NetDef net = petrinet::reduction_net_sequential();
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      Marking m;
      for (int v : {1, 2, 3, 4, 5}) m.add(net, "p", Value::integer(v));
      m.add(net, "boot", Value::unit());
      RunConfig cfg;
      cfg.workers = 4;
      cfg.seed = seed;
      ExecResult r = run(net, m, empty_registry, cfg);
      CHECK(r.quiesced);
      REQUIRE(r.final_marking.at("s").size() == 1);
      CHECK(r.final_marking.at("s")[0].value.as_int() == 15);
    }
  }

  SUBCASE("parallel variant, many seeds") {
    NetDef net = petrinet::reduction_net_parallel();
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      Marking m;
      for (int v : {1, 2, 3, 4, 5}) m.add(net, "p", Value::integer(v));
      m.add(net, "cyc_u", Value::unit());
      RunConfig cfg;
      cfg.workers = 4;
      cfg.seed = seed;
      ExecResult r = run(net, m, empty_registry, cfg);
      CHECK(r.quiesced);
      REQUIRE(r.final_marking.at("left").size() == 1);
      CHECK(r.final_marking.at("left")[0].value.as_int() == 15);
    }
  }
}

TEST_CASE("task dispatch with a worker pool") {
  NetDef net = doubling_net();
  Marking m;
  for (int v = 1; v <= 10; ++v) m.add(net, "a", Value::integer(v));
  RunConfig cfg;
  cfg.workers = 4;
  ExecResult r = run(net, m, doubling_registry(), cfg);
  CHECK(r.quiesced);
  CHECK(r.firings == 10);
  REQUIRE(r.final_marking.at("b").size() == 10);
  std::int64_t sum = 0;
  for (const auto& t : r.final_marking.at("b")) sum += t.value.as_int();
  CHECK(sum == 2 * 55);
}

TEST_CASE("token accounting from traces") {
  NetDef net = petrinet::reduction_net_parallel();
  Marking m;
  for (int v : {7, 11, 13}) m.add(net, "p", Value::integer(v));
  m.add(net, "cyc_u", Value::unit());
  RunConfig cfg;
  cfg.workers = 2;
  cfg.seed = 42;
  ExecResult r = run(net, m, {}, cfg);
  auto rep = testutil::replay_trace(net, m, r.trace);
  CHECK(rep.ok);
  CHECK(testutil::matches_final(rep, net, r.final_marking));
}

TEST_CASE("quiescence soundness") {
  NetDef net = doubling_net();
  Marking m;
  m.add(net, "a", Value::integer(3));
  ExecResult r = run(net, m, doubling_registry(), RunConfig{});
  CHECK(r.quiesced);
  CHECK(petrinet::enabled_bindings(net, r.final_marking).empty());
}

TEST_CASE("worker panic aborts the run with a diagnostic") {
  NetDef net = doubling_net();
  Marking m;
  m.add(net, "a", Value::integer(1));
  TaskRegistry reg;
  reg["double"] = [](const PortValues&) -> PortValues {
    throw std::runtime_error("boom");
  };
  CHECK_THROWS_WITH_AS(run(net, m, reg, RunConfig{}),
                       doctest::Contains("boom"), std::runtime_error);
}

TEST_CASE("unknown task kind aborts") {
  NetDef net = doubling_net();
  Marking m;
  m.add(net, "a", Value::integer(1));
  CHECK_THROWS_AS(run(net, m, {}, RunConfig{}), std::runtime_error);
}

TEST_CASE("budget exhaustion surfaces as an error result") {
  NetDef net = doubling_net();
  Marking m;
  m.add(net, "a", Value::integer(1));
  TaskRegistry reg;
  reg["double"] = [](const PortValues& in) -> PortValues {
    // A deliberately heavy Groebner computation.
    auto R = testutil::make_ring(103, {"x", "y", "z"});
    std::vector<polyalg::Poly> gens = {
        polyalg::poly_parse("x^3*y - z^2 - 1", R),
        polyalg::poly_parse("y^3*z - x^2 - 1", R),
        polyalg::poly_parse("z^3*x - y^2 - 1", R)};
    groebner::buchberger(R, gens);
    return {{"y", in.at("x")}};
  };
  RunConfig cfg;
  cfg.budget_max_reductions = 50;
  ExecResult r = run(net, m, reg, cfg);
  REQUIRE(r.error.has_value());
  CHECK(r.error->find("budget") != std::string::npos);
  CHECK_FALSE(r.quiesced);
}

TEST_CASE("external heureka is idempotent and safe after completion") {
  NetDef net = doubling_net();
  Marking m;
  m.add(net, "a", Value::integer(5));
  RunHandle handle;
  ExecResult r = run(net, m, doubling_registry(), RunConfig{}, &handle);
  CHECK(r.quiesced);
  handle.heureka();  // run already finished; nothing to do
  handle.heureka();
  CHECK(handle.requested());
}

TEST_CASE("external heureka before start drains and aborts") {
  NetDef net = doubling_net();
  Marking m;
  m.add(net, "a", Value::integer(5));
  RunHandle handle;
  handle.heureka();
  ExecResult r = run(net, m, doubling_registry(), RunConfig{}, &handle);
  CHECK(r.aborted);
  CHECK(r.firings == 0);
  CHECK(r.final_marking.empty());
}

TEST_CASE("trace sink receives JSON lines") {
  NetDef net = doubling_net();
  Marking m;
  m.add(net, "a", Value::integer(2));
  std::ostringstream sink;
  RunConfig cfg;
  cfg.trace_sink = &sink;
  ExecResult r = run(net, m, doubling_registry(), cfg);
  CHECK(r.firings == 1);
  std::istringstream lines(sink.str());
  std::string line;
  int events = 0, summaries = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    if (j.contains("summary"))
      ++summaries;
    else {
      ++events;
      CHECK(j.contains("seq"));
      CHECK(j.contains("transition"));
      CHECK(j.contains("consumed"));
      CHECK(j.contains("produced"));
    }
  }
  CHECK(events == 1);
  CHECK(summaries == 1);
}
