#include "petrinet/smoothness_net.hpp"

namespace petrinet {

Value chart_token(std::shared_ptr<const smoothness::ChartTriple> triple) {
  return Value::opaque(kChartTag, std::move(triple));
}

Value verdict_token(std::shared_ptr<const smoothness::Verdict> verdict) {
  return Value::opaque(kVerdictTag, std::move(verdict));
}

std::shared_ptr<const smoothness::ChartTriple> chart_of(const Value& v) {
  return opaque_payload<smoothness::ChartTriple>(v, kChartTag);
}

std::shared_ptr<const smoothness::Verdict> verdict_of(const Value& v) {
  return opaque_payload<smoothness::Verdict>(v, kVerdictTag);
}

NetDef build_smoothness_net(int codim_limit) {
  if (codim_limit < 0)
    throw std::invalid_argument("codimension limit must be non-negative");

  ColorType chart = ColorType::opaque(kChartTag);
  ColorType verdict = ColorType::opaque(kVerdictTag);
  ColorType routed = ColorType::record(
      {{"triple", chart}, {"route", ColorType::integer()}});
  ColorType checked = ColorType::record(
      {{"triple", chart}, {"ok", ColorType::boolean()}});
  ColorType worklist = ColorType::list(chart);

  NetDef net;
  net.meta["codim_limit"] = codim_limit;
  net.heureka_place = "o";
  net.places.push_back({"i", "i", chart});
  net.places.push_back({"routed", "routed", routed});
  net.places.push_back({"delta_out", "delta_out", checked});
  net.places.push_back({"jac_out", "jac_out", checked});
  net.places.push_back({"worklist", "worklist", worklist});
  net.places.push_back({"o", "o", verdict});

  auto task = [](const char* id, const char* kind) {
    Transition t;
    t.id = t.name = id;
    t.body = BodyKind::task;
    t.task_kind = kind;
    return t;
  };
  auto removal = [](const char* id) {
    Transition t;
    t.id = t.name = id;
    t.body = BodyKind::expression;
    return t;
  };

  // t: dimension/codimension classification.
  {
    Transition t = task("t", "classify");
    t.in_ports.push_back({"c", chart, "i"});
    t.out_ports.push_back({"r", routed, "routed"});
    net.transitions.push_back(std::move(t));
  }
  // r_t: charts whose dimensions agree are smooth, drop the token.
  {
    Transition t = removal("r_t");
    t.in_ports.push_back({"r", routed, "routed"});
    t.condition = Expr::eq(Expr::port("r", {"route"}), Expr::lit(0));
    net.transitions.push_back(std::move(t));
  }
  // j: embedded Jacobian within the codimension limit.
  {
    Transition t = task("j", "embedded_jacobian");
    t.in_ports.push_back({"r", routed, "routed"});
    t.condition = Expr::eq(Expr::port("r", {"route"}), Expr::lit(1));
    t.out_ports.push_back({"res", checked, "jac_out"});
    net.transitions.push_back(std::move(t));
  }
  // d: order-2 locus check above the limit.
  {
    Transition t = task("d", "delta_check");
    t.in_ports.push_back({"r", routed, "routed"});
    t.condition = Expr::eq(Expr::port("r", {"route"}), Expr::lit(2));
    t.out_ports.push_back({"res", checked, "delta_out"});
    net.transitions.push_back(std::move(t));
  }
  // s: descent into covering charts (a single list-valued token).
  {
    Transition t = task("s", "descent");
    t.in_ports.push_back({"res", checked, "delta_out"});
    t.condition = Expr::eq(Expr::port("res", {"ok"}), Expr::truth(true));
    t.out_ports.push_back({"lst", worklist, "worklist"});
    net.transitions.push_back(std::move(t));
  }
  // h_d / h_j: singularity certified, emit the false verdict (Heureka).
  {
    Transition t = task("h_d", "certify_singular");
    t.in_ports.push_back({"res", checked, "delta_out"});
    t.condition = Expr::eq(Expr::port("res", {"ok"}), Expr::truth(false));
    t.out_ports.push_back({"v", verdict, "o"});
    net.transitions.push_back(std::move(t));
  }
  {
    Transition t = task("h_j", "certify_singular");
    t.in_ports.push_back({"res", checked, "jac_out"});
    t.condition = Expr::eq(Expr::port("res", {"ok"}), Expr::truth(false));
    t.out_ports.push_back({"v", verdict, "o"});
    net.transitions.push_back(std::move(t));
  }
  // r_j: Jacobian-smooth charts are done, drop the token.
  {
    Transition t = removal("r_j");
    t.in_ports.push_back({"res", checked, "jac_out"});
    t.condition = Expr::eq(Expr::port("res", {"ok"}), Expr::truth(true));
    net.transitions.push_back(std::move(t));
  }
  // e: unroll one chart from the descent list back onto i.
  {
    Transition t;
    t.id = t.name = "e";
    t.in_ports.push_back({"lst", worklist, "worklist"});
    t.condition = Expr::eq(Expr::empty(Expr::port("lst")), Expr::truth(false));
    t.out_ports.push_back({"item", chart, "i"});
    t.out_ports.push_back({"rest", worklist, "worklist"});
    t.assigns.push_back({"item", {}, Expr::head(Expr::port("lst"))});
    t.assigns.push_back({"rest", {}, Expr::tail(Expr::port("lst"))});
    net.transitions.push_back(std::move(t));
  }
  // x: delete the exhausted list.
  {
    Transition t = removal("x");
    t.in_ports.push_back({"lst", worklist, "worklist"});
    t.condition = Expr::eq(Expr::empty(Expr::port("lst")), Expr::truth(true));
    net.transitions.push_back(std::move(t));
  }
  return net;
}

}  // namespace petrinet
