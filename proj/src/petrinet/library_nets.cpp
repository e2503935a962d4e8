#include "petrinet/library_nets.hpp"

namespace petrinet {

NetDef phi_net() {
  NetDef net;
  ColorType u = ColorType::unit();
  net.places.push_back({"i", "i", u});
  net.places.push_back({"o", "o", u});
  Transition t;
  t.id = t.name = "t";
  t.in_ports.push_back({"x", u, "i"});
  t.out_ports.push_back({"y", u, "o"});
  t.assigns.push_back({"y", {}, Expr::port("x")});
  net.transitions.push_back(std::move(t));
  return net;
}

NetDef psi_net(bool join_on_equal_num) {
  NetDef net;
  ColorType block = ColorType::record({{"num", ColorType::integer()}});
  for (const char* p : {"i", "a", "b", "l", "r", "out"})
    net.places.push_back({p, p, block});

  Transition s;
  s.id = s.name = "s";
  s.in_ports.push_back({"x", block, "i"});
  s.out_ports.push_back({"u", block, "a"});
  s.out_ports.push_back({"v", block, "b"});
  s.assigns.push_back({"u", {}, Expr::port("x")});
  s.assigns.push_back({"v", {}, Expr::port("x")});
  net.transitions.push_back(std::move(s));

  auto passthrough = [&](const char* id, const char* from, const char* to) {
    Transition t;
    t.id = t.name = id;
    t.in_ports.push_back({"x", block, from});
    t.out_ports.push_back({"y", block, to});
    t.assigns.push_back({"y", {}, Expr::port("x")});
    return t;
  };
  net.transitions.push_back(passthrough("f", "a", "l"));
  net.transitions.push_back(passthrough("g", "b", "r"));

  Transition j;
  j.id = j.name = "j";
  j.in_ports.push_back({"l", block, "l"});
  j.in_ports.push_back({"r", block, "r"});
  j.out_ports.push_back({"o", block, "out"});
  if (join_on_equal_num)
    j.condition = Expr::eq(Expr::port("l", {"num"}), Expr::port("r", {"num"}));
  j.assigns.push_back({"o", {}, Expr::port("l")});
  net.transitions.push_back(std::move(j));
  return net;
}

NetDef reduction_net_sequential() {
  NetDef net;
  ColorType num = ColorType::integer();
  ColorType u = ColorType::unit();
  net.places.push_back({"p", "p", num});
  net.places.push_back({"s", "s", num});
  net.places.push_back({"boot", "boot", u});

  // First value moves to the sum place, consuming the bootstrap token.
  Transition down;
  down.id = down.name = "down";
  down.in_ports.push_back({"v", num, "p"});
  down.in_ports.push_back({"b", u, "boot"});
  down.out_ports.push_back({"o", num, "s"});
  down.assigns.push_back({"o", {}, Expr::port("v")});
  net.transitions.push_back(std::move(down));

  Transition plus;
  plus.id = plus.name = "plus";
  plus.in_ports.push_back({"v", num, "p"});
  plus.in_ports.push_back({"acc", num, "s"});
  plus.out_ports.push_back({"o", num, "s"});
  plus.assigns.push_back(
      {"o", {}, Expr::add(Expr::port("acc"), Expr::port("v"))});
  net.transitions.push_back(std::move(plus));
  return net;
}

NetDef reduction_net_parallel() {
  NetDef net;
  ColorType num = ColorType::integer();
  ColorType u = ColorType::unit();
  net.places.push_back({"p", "p", num});
  net.places.push_back({"left", "left", num});
  net.places.push_back({"right", "right", num});
  net.places.push_back({"cyc_u", "cyc_u", u});
  net.places.push_back({"cyc_d", "cyc_d", u});

  auto mover = [&](const char* id, const char* from_cyc, const char* to_cyc,
                   const char* target) {
    Transition t;
    t.id = t.name = id;
    t.in_ports.push_back({"v", num, "p"});
    t.in_ports.push_back({"c", u, from_cyc});
    t.out_ports.push_back({"o", num, target});
    t.out_ports.push_back({"n", u, to_cyc});
    t.assigns.push_back({"o", {}, Expr::port("v")});
    t.assigns.push_back({"n", {}, Expr::port("c")});
    return t;
  };
  // The cycle token alternates the destination buffer.
  net.transitions.push_back(mover("move_l", "cyc_u", "cyc_d", "left"));
  net.transitions.push_back(mover("move_r", "cyc_d", "cyc_u", "right"));

  Transition plus;
  plus.id = plus.name = "plus";
  plus.in_ports.push_back({"a", num, "left"});
  plus.in_ports.push_back({"b", num, "right"});
  plus.out_ports.push_back({"o", num, "p"});
  plus.assigns.push_back(
      {"o", {}, Expr::add(Expr::port("a"), Expr::port("b"))});
  net.transitions.push_back(std::move(plus));
  return net;
}

}  // namespace petrinet
