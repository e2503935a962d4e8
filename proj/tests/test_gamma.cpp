#include "doctest.h"

#include <fstream>

#include "executor/smoothness_run.hpp"
#include "oracle.hpp"
#include "test_util.hpp"
#include "trace_replay.hpp"

using namespace executor;
using groebner::Ideal;
using petrinet::build_smoothness_net;
using petrinet::Value;
using polyalg::Poly;
using polyalg::Ring;
using polyalg::poly_parse;
using smoothness::ChartMode;
using smoothness::ChartTriple;
using testutil::make_ring;

namespace {

Ideal ideal_of(const Ring& R, std::initializer_list<const char*> gens) {
  std::vector<Poly> ps;
  for (const char* g : gens) ps.push_back(poly_parse(g, R));
  return Ideal(R, std::move(ps));
}

std::vector<ChartTriple> affine_charts(const Ideal& I) {
  return smoothness::chart_decompose(I, ChartMode::affine);
}

}  // namespace

TEST_CASE("the smoothness net is well-formed") {
  CHECK(petrinet::validate_net(build_smoothness_net(2)).empty());
  CHECK(petrinet::validate_net(build_smoothness_net(0)).empty());
}

TEST_CASE("net serialization matches the golden file") {
  auto j = build_smoothness_net(2).to_json();
  std::ifstream in(std::string(PROJECT_ROOT) + "/tests/golden/gamma_c2.json");
  REQUIRE(in.good());
  nlohmann::json golden = nlohmann::json::parse(in);
  CHECK(j == golden);
}

TEST_CASE("cusp is singular, sphere is smooth, matching the driver") {
  Ring R2 = make_ring(103, {"x", "y"});
  Ring R3 = make_ring(103, {"x", "y", "z"});

  SUBCASE("cusp") {
    auto charts = affine_charts(ideal_of(R2, {"y^2 - x^3"}));
    RunResult r = run_smoothness_net(charts, 2, RunConfig{});
    REQUIRE(r.verdict.has_value());
    CHECK_FALSE(r.verdict->smooth);
    REQUIRE(r.verdict->witness.has_value());
    CHECK(r.verdict->witness->x_ideal.same_ideal_as(charts[0].x_ideal));
    CHECK(smoothness::hybrid_smoothness_test(charts[0], 2) == false);
    // Exactly one token on o.
    CHECK(r.exec.final_marking.at("o").size() == 1);
    CHECK(r.exec.final_marking.total_tokens() == 1);
  }

  SUBCASE("sphere") {
    auto charts = affine_charts(ideal_of(R3, {"x^2 + y^2 + z^2 - 1"}));
    RunResult r = run_smoothness_net(charts, 2, RunConfig{});
    REQUIRE(r.verdict.has_value());
    CHECK(r.verdict->smooth);
    CHECK_FALSE(r.verdict->witness.has_value());
    CHECK(smoothness::hybrid_smoothness_test(charts[0], 2) == true);
    CHECK(r.exec.final_marking.at("o").size() == 1);
  }
}

TEST_CASE("net verdicts equal the sequential driver across inputs and limits") {
  Ring R2 = make_ring(103, {"x", "y"});
  Ring R3 = make_ring(103, {"x", "y", "z"});
  std::vector<Ideal> inputs = {
      ideal_of(R2, {"y^2 - x^3"}),
      ideal_of(R2, {"x^2 + y^2 - 1"}),
      ideal_of(R3, {"x^2 - y^2 * z"}),
      ideal_of(R3, {"y - x^2", "z - x^3"}),
      ideal_of(R3, {"x*y", "x*z", "y*z"}),
  };
  for (const auto& I : inputs) {
    auto charts = affine_charts(I);
    for (int c = 0; c <= 3; ++c) {
      bool sequential = smoothness::hybrid_smoothness_test(charts[0], c);
      RunResult r = run_smoothness_net(charts, c, RunConfig{});
      REQUIRE(r.verdict.has_value());
      CHECK(r.verdict->smooth == sequential);
    }
  }
}

TEST_CASE("verdicts are identical across worker counts and seeds") {
  Ring R3 = make_ring(103, {"x", "y", "z"});
  auto charts = affine_charts(ideal_of(R3, {"x^2 + y^2 + z^2 - 1"}));
  bool expected = smoothness::hybrid_smoothness_test(charts[0], 0);
  for (unsigned workers : {1u, 2u, 4u, 8u})
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      RunConfig cfg;
      cfg.workers = workers;
      cfg.seed = seed;
      RunResult r = run_smoothness_net(charts, 0, cfg);
      REQUIRE(r.verdict.has_value());
      CHECK(r.verdict->smooth == expected);
    }
}

TEST_CASE("trace replay: accounting, one output token, routed consumption") {
  Ring R3 = make_ring(103, {"x", "y", "z"});
  auto net = build_smoothness_net(0);
  auto charts = affine_charts(ideal_of(R3, {"y - x^2", "z - x^3"}));
  petrinet::Marking initial;
  for (const auto& chart : charts)
    initial.add(net, "i",
                petrinet::chart_token(
                    std::make_shared<const ChartTriple>(chart)));

  ChartLog log;
  auto registry = smoothness_task_registry(0, &log);
  RunConfig cfg;
  cfg.workers = 2;
  cfg.seed = 9;
  cfg.quiescence_place = "o";
  cfg.quiescence_value = [] {
    auto v = std::make_shared<smoothness::Verdict>();
    v->smooth = true;
    return petrinet::verdict_token(std::move(v));
  };
  ExecResult r = run(net, initial, registry, cfg);
  CHECK(r.quiesced);

  auto rep = testutil::replay_trace(net, initial, r.trace);
  CHECK(rep.ok);
  CHECK(testutil::matches_final(rep, net, r.final_marking));
  CHECK(rep.count("o") == 1);

  // Tokens leaving "routed" may only be consumed by r_t, d or j; the
  // checked places only by their own pair.
  for (const auto& fr : r.trace) {
    if (fr.transition == "r_t" || fr.transition == "d" ||
        fr.transition == "j" || fr.transition == "s" ||
        fr.transition == "h_d" || fr.transition == "h_j" ||
        fr.transition == "r_j")
      continue;
    const petrinet::Transition* t = net.find_transition(fr.transition);
    if (!t) continue;  // synthetic events
    for (const auto& p : t->in_ports) {
      CHECK(p.place != "routed");
      CHECK(p.place != "delta_out");
      CHECK(p.place != "jac_out");
    }
  }
}

TEST_CASE("the list-splitting pair unrolls one chart at a time") {
  Ring R2 = make_ring(103, {"x", "y"});
  auto net = build_smoothness_net(2);
  auto a = std::make_shared<const ChartTriple>(
      affine_charts(ideal_of(R2, {"x"}))[0]);
  auto b = std::make_shared<const ChartTriple>(
      affine_charts(ideal_of(R2, {"y"}))[0]);
  petrinet::Marking m;
  m.add(net, "worklist",
        Value::list({petrinet::chart_token(a), petrinet::chart_token(b)}));

  // e fires: the head lands on i, the list token shrinks to [b].
  auto bs = petrinet::enabled_bindings(net, m);
  REQUIRE(bs.size() == 1);
  CHECK(bs[0].transition == "e");
  const auto* e = net.find_transition("e");
  auto produced = petrinet::eval_body(*e, bs[0].values());
  auto next = petrinet::fire(net, m, bs[0], produced);
  REQUIRE(next.at("i").size() == 1);
  CHECK(petrinet::chart_of(next.at("i")[0].value) == a);
  REQUIRE(next.at("worklist").size() == 1);
  REQUIRE(next.at("worklist")[0].value.as_list().size() == 1);

  // One more e, then x deletes the empty list.
  auto bs2 = petrinet::enabled_bindings(net, next);
  // `t` is now enabled on i as well; find e.
  const petrinet::Binding* eb = nullptr;
  for (const auto& cand : bs2)
    if (cand.transition == "e") eb = &cand;
  REQUIRE(eb);
  auto next2 = petrinet::fire(net, next, *eb,
                              petrinet::eval_body(*e, eb->values()));
  const petrinet::Binding* xb = nullptr;
  auto bs3 = petrinet::enabled_bindings(net, next2);
  for (const auto& cand : bs3)
    if (cand.transition == "x") xb = &cand;
  REQUIRE(xb);
  auto next3 = petrinet::fire(net, next2, *xb, {});
  CHECK(next3.at("worklist").empty());
  CHECK(next3.at("i").size() == 2);
}

TEST_CASE("routing conditions are mutually exclusive and exhaustive") {
  auto net = build_smoothness_net(1);
  auto dummy_triple = Value::opaque(petrinet::kChartTag, nullptr);

  auto count_enabled = [&](std::initializer_list<const char*> group,
                           const Value& token_value) {
    int enabled = 0;
    for (const char* id : group) {
      const petrinet::Transition* t = net.find_transition(id);
      REQUIRE(t);
      petrinet::PortValues env;
      env[t->in_ports[0].name] = token_value;
      if (!t->condition || petrinet::eval(*t->condition, env).as_bool())
        ++enabled;
    }
    return enabled;
  };

  for (std::int64_t route : {0, 1, 2}) {
    auto v = Value::record(
        {{"triple", dummy_triple}, {"route", Value::integer(route)}});
    CHECK(count_enabled({"r_t", "j", "d"}, v) == 1);
  }
  for (bool ok : {true, false}) {
    auto v = Value::record(
        {{"triple", dummy_triple}, {"ok", Value::boolean(ok)}});
    CHECK(count_enabled({"s", "h_d"}, v) == 1);
    CHECK(count_enabled({"h_j", "r_j"}, v) == 1);
  }
}

TEST_CASE("heureka cuts off outstanding work on singular input") {
  // Three projective charts, one of which contains the cusp; after the
  // o-token lands no further net transitions fire.
  Ring P2 = make_ring(103, {"x", "y", "z"});
  Ideal cuspidal = ideal_of(P2, {"z*y^2 - x^3"});
  auto charts = smoothness::chart_decompose(cuspidal, ChartMode::projective);
  RunConfig cfg;
  cfg.workers = 8;
  cfg.seed = 3;
  RunResult r = run_smoothness_net(charts, 0, cfg);
  REQUIRE(r.verdict.has_value());
  CHECK_FALSE(r.verdict->smooth);
  CHECK(r.exec.heureka);
  CHECK(r.exec.final_marking.at("o").size() == 1);
  CHECK(r.exec.final_marking.total_tokens() == 1);
  bool seen_output = false;
  for (const auto& fr : r.exec.trace) {
    if (seen_output)
      CHECK((fr.transition == "@heureka" || fr.transition == "@cancelled"));
    if (fr.transition == "h_d" || fr.transition == "h_j") seen_output = true;
  }
  CHECK(seen_output);
}

TEST_CASE("chart log records the descent tree deterministically") {
  Ring R3 = make_ring(103, {"x", "y", "z"});
  auto charts = affine_charts(ideal_of(R3, {"y - x^2", "z - x^3"}));
  RunConfig cfg;
  cfg.workers = 4;
  RunResult a = run_smoothness_net(charts, 0, cfg);
  cfg.seed = 77;
  RunResult b = run_smoothness_net(charts, 0, cfg);
  REQUIRE(a.verdict.has_value());
  REQUIRE(b.verdict.has_value());
  CHECK(a.verdict->smooth == b.verdict->smooth);
  // Chart ids form the same set regardless of schedule (smooth run:
  // the whole tree is processed exactly once).
  auto ids = [](const RunResult& r) {
    std::vector<std::string> v;
    for (const auto& c : r.chart_tree) v.push_back(c.id);
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(ids(a) == ids(b));
  CHECK(a.verdict->charts_processed == b.verdict->charts_processed);
}
