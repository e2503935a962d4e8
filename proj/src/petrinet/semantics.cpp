#include "petrinet/semantics.hpp"

#include <algorithm>
#include <set>

namespace petrinet {

PortValues Binding::values() const {
  PortValues vs;
  for (const auto& [port, token] : inputs) vs[port] = token.value;
  return vs;
}

std::vector<std::uint64_t> Binding::token_ids() const {
  std::vector<std::uint64_t> ids;
  ids.reserve(inputs.size());
  for (const auto& [_, token] : inputs) ids.push_back(token.id);
  return ids;
}

namespace {

// Leaf paths of a color: the full set of assignment targets that cover a
// value of this type ("" for scalars).
void collect_leaf_paths(const ColorType& c, std::vector<std::string>& prefix,
                        std::vector<std::vector<std::string>>& out) {
  if (c.kind() == ColorType::Kind::record) {
    for (const auto& [name, sub] : c.fields()) {
      prefix.push_back(name);
      collect_leaf_paths(sub, prefix, out);
      prefix.pop_back();
    }
  } else {
    out.push_back(prefix);
  }
}

const ColorType* resolve_path(const ColorType& c,
                              const std::vector<std::string>& path) {
  const ColorType* cur = &c;
  for (const auto& f : path) {
    cur = cur->field(f);
    if (!cur) return nullptr;
  }
  return cur;
}

bool path_prefix(const std::vector<std::string>& a,
                 const std::vector<std::string>& b) {
  if (a.size() > b.size()) return false;
  return std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace

std::vector<std::string> validate_net(const NetDef& net) {
  std::vector<std::string> errors;
  auto err = [&](const std::string& m) { errors.push_back(m); };

  std::set<std::string> place_ids;
  for (const auto& p : net.places) {
    if (p.id.empty()) err("place with empty id");
    if (!place_ids.insert(p.id).second) err("duplicate place id: " + p.id);
  }
  std::set<std::string> transition_ids;
  for (const auto& t : net.transitions) {
    if (!transition_ids.insert(t.id).second)
      err("duplicate transition id: " + t.id);
  }
  if (net.heureka_place && !net.find_place(*net.heureka_place))
    err("heureka place does not exist: " + *net.heureka_place);

  for (const auto& t : net.transitions) {
    const std::string where = "transition " + t.id + ": ";
    if (t.in_ports.empty()) err(where + "no in-ports");

    std::set<std::string> port_names;
    std::map<std::string, ColorType> in_env;
    for (const auto& p : t.in_ports) {
      if (!port_names.insert(p.name).second)
        err(where + "duplicate port name " + p.name);
      const Place* pl = net.find_place(p.place);
      if (!pl) {
        err(where + "in-port " + p.name + " connects to unknown place " +
            p.place);
        continue;
      }
      if (!(pl->color == p.color))
        err(where + "in-port " + p.name + " color " + p.color.to_string() +
            " does not match place " + p.place + " color " +
            pl->color.to_string());
      in_env.emplace(p.name, p.color);
    }
    for (const auto& p : t.out_ports) {
      if (!port_names.insert(p.name).second)
        err(where + "duplicate port name " + p.name);
      const Place* pl = net.find_place(p.place);
      if (!pl) {
        err(where + "out-port " + p.name + " connects to unknown place " +
            p.place);
        continue;
      }
      if (!(pl->color == p.color))
        err(where + "out-port " + p.name + " color " + p.color.to_string() +
            " does not match place " + p.place + " color " +
            pl->color.to_string());
    }

    if (t.condition) {
      std::vector<std::string> cond_errors;
      auto ct = t.condition->infer(in_env, cond_errors);
      for (const auto& e : cond_errors) err(where + "condition: " + e);
      if (ct && *ct != ColorType::boolean())
        err(where + "condition is not boolean");
    }

    if (t.body == BodyKind::task) {
      if (t.task_kind.empty()) err(where + "task body without kind");
      if (!t.assigns.empty())
        err(where + "task body must not carry expressions");
      continue;
    }

    // Expression body: typed assignments covering every out-port leaf
    // exactly once.
    std::map<std::string, std::vector<std::vector<std::string>>> assigned;
    for (const auto& a : t.assigns) {
      const PortDef* out = t.out_port(a.port);
      if (!out) {
        err(where + "assignment to unknown out-port " + a.port);
        continue;
      }
      const ColorType* target = resolve_path(out->color, a.path);
      if (!target) {
        err(where + "assignment path does not exist: " + a.to_string());
        continue;
      }
      std::vector<std::string> rhs_errors;
      auto vt = a.value.infer(in_env, rhs_errors);
      for (const auto& e : rhs_errors) err(where + e);
      if (vt && !(*vt == *target))
        err(where + "assignment type mismatch: " + a.to_string() + " has " +
            vt->to_string() + ", target is " + target->to_string());
      for (const auto& prev : assigned[a.port])
        if (path_prefix(prev, a.path) || path_prefix(a.path, prev))
          err(where + "overlapping assignments to " + a.port);
      assigned[a.port].push_back(a.path);
    }
    for (const auto& p : t.out_ports) {
      std::vector<std::vector<std::string>> leaves;
      std::vector<std::string> prefix;
      collect_leaf_paths(p.color, prefix, leaves);
      for (const auto& leaf : leaves) {
        bool covered = false;
        for (const auto& a : assigned[p.name])
          if (path_prefix(a, leaf)) {
            covered = true;
            break;
          }
        if (!covered) {
          std::string path = p.name;
          for (const auto& f : leaf) path += "." + f;
          err(where + "out-port leaf not assigned: " + path);
        }
      }
    }
  }
  return errors;
}

namespace {

bool condition_holds(const Transition& t, const PortValues& vals) {
  if (!t.condition) return true;
  return eval(*t.condition, vals).as_bool();
}

void enumerate_bindings(const NetDef& net, const Marking& m,
                        const Transition& t, std::size_t port_index,
                        std::vector<std::pair<std::string, Token>>& acc,
                        std::set<std::uint64_t>& used,
                        std::vector<Binding>& out) {
  if (port_index == t.in_ports.size()) {
    Binding b{t.id, acc};
    if (condition_holds(t, b.values())) out.push_back(std::move(b));
    return;
  }
  const PortDef& port = t.in_ports[port_index];
  for (const Token& tok : m.at(port.place)) {
    if (used.count(tok.id)) continue;
    used.insert(tok.id);
    acc.emplace_back(port.name, tok);
    enumerate_bindings(net, m, t, port_index + 1, acc, used, out);
    acc.pop_back();
    used.erase(tok.id);
  }
}

}  // namespace

std::vector<Binding> enabled_bindings(const NetDef& net, const Marking& m) {
  std::vector<const Transition*> ts;
  ts.reserve(net.transitions.size());
  for (const auto& t : net.transitions) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(),
            [](const Transition* a, const Transition* b) {
              return a->id < b->id;
            });
  std::vector<Binding> out;
  for (const Transition* t : ts) {
    std::vector<std::pair<std::string, Token>> acc;
    std::set<std::uint64_t> used;
    enumerate_bindings(net, m, *t, 0, acc, used, out);
  }
  return out;
}

PortValues eval_body(const Transition& t, const PortValues& binding) {
  if (t.body != BodyKind::expression)
    throw std::logic_error("eval_body on a task transition");
  // Build each out-port value: either one whole-port assignment or a
  // full set of record-field assignments.
  PortValues out;
  std::map<std::string, Value::Record> partial;
  for (const auto& a : t.assigns) {
    Value v = eval(a.value, binding);
    if (a.path.empty()) {
      out[a.port] = std::move(v);
    } else if (a.path.size() == 1) {
      partial[a.port].emplace_back(a.path[0], std::move(v));
    } else {
      throw std::logic_error("nested field assignment not supported: " +
                             a.to_string());
    }
  }
  for (auto& [port, fields] : partial) {
    const PortDef* def = t.out_port(port);
    // Order fields as declared by the color.
    Value::Record ordered;
    for (const auto& [name, ftype] : def->color.fields()) {
      (void)ftype;
      for (auto& [k, v] : fields)
        if (k == name) ordered.emplace_back(k, v);
    }
    out[port] = Value::record(std::move(ordered));
  }
  return out;
}

namespace {

void consume_with_net(Marking& m, const NetDef& net, const Binding& b) {
  const Transition* t = net.find_transition(b.transition);
  if (!t) throw std::invalid_argument("unknown transition " + b.transition);
  // Check all tokens are still present before mutating.
  for (const auto& [port, token] : b.inputs) {
    const PortDef* p = t->in_port(port);
    if (!p) throw std::invalid_argument("unknown port " + port);
    const auto& toks = m.at(p->place);
    bool found = false;
    for (const auto& tk : toks)
      if (tk.id == token.id) {
        found = true;
        break;
      }
    if (!found) throw stale_binding();
  }
  for (const auto& [port, token] : b.inputs)
    m.remove(t->in_port(port)->place, token.id);
}

}  // namespace

std::vector<std::uint64_t> produce(Marking& m, const NetDef& net,
                                   const Transition& t,
                                   const PortValues& produced) {
  std::vector<std::uint64_t> ids;
  for (const auto& p : t.out_ports) {
    auto it = produced.find(p.name);
    if (it == produced.end())
      throw std::invalid_argument("missing produced value for out-port " +
                                  p.name + " of " + t.id);
    if (!it->second.conforms(p.color))
      throw std::invalid_argument("produced value for out-port " + p.name +
                                  " of " + t.id + " has wrong type");
    ids.push_back(m.add(net, p.place, it->second));
  }
  return ids;
}

Marking fire(const NetDef& net, const Marking& m, const Binding& b,
             const PortValues& produced) {
  const Transition* t = net.find_transition(b.transition);
  if (!t) throw std::invalid_argument("unknown transition " + b.transition);
  Marking next = m;
  consume_with_net(next, net, b);
  produce(next, net, *t, produced);
  return next;
}

void consume(Marking& m, const NetDef& net, const Binding& b) {
  consume_with_net(m, net, b);
}

std::vector<std::size_t> StateGraph::terminal_states() const {
  std::vector<bool> has_out(states.size(), false);
  for (const auto& [from, to, label] : edges) {
    (void)to;
    (void)label;
    has_out[from] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < states.size(); ++i)
    if (!has_out[i]) out.push_back(i);
  return out;
}

StateGraph state_graph(const NetDef& net, const Marking& initial,
                       std::size_t max_states) {
  for (const auto& t : net.transitions)
    if (t.body == BodyKind::task)
      throw std::invalid_argument(
          "state_graph requires expression-bodied transitions");

  StateGraph g;
  std::map<std::string, std::size_t> index;
  std::vector<std::size_t> frontier;
  g.states.push_back(initial);
  index[initial.canonical()] = 0;
  frontier.push_back(0);
  std::set<std::tuple<std::size_t, std::size_t, std::string>> edge_set;

  while (!frontier.empty()) {
    std::size_t cur = frontier.back();
    frontier.pop_back();
    Marking m = g.states[cur];
    for (const auto& b : enabled_bindings(net, m)) {
      const Transition* t = net.find_transition(b.transition);
      PortValues produced = eval_body(*t, b.values());
      Marking next = fire(net, m, b, produced);
      std::string key = next.canonical();
      auto it = index.find(key);
      std::size_t idx;
      if (it == index.end()) {
        if (g.states.size() >= max_states) {
          g.complete = false;
          continue;
        }
        idx = g.states.size();
        g.states.push_back(next);
        index[key] = idx;
        frontier.push_back(idx);
      } else {
        idx = it->second;
      }
      if (edge_set.insert({cur, idx, b.transition}).second)
        g.edges.emplace_back(cur, idx, b.transition);
    }
  }
  return g;
}

}  // namespace petrinet
