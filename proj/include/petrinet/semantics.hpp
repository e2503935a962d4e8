#pragma once

#include "petrinet/net.hpp"

namespace petrinet {

struct stale_binding : std::runtime_error {
  stale_binding() : std::runtime_error("binding token already consumed") {}
};

/// One enabled firing choice: the transition plus one token per in-port.
struct Binding {
  std::string transition;
  std::vector<std::pair<std::string, Token>> inputs;  // in-port order

  PortValues values() const;
  std::vector<std::uint64_t> token_ids() const;
};

/// Full static check: port/place color agreement, condition and body
/// typing, out-port coverage. Empty result means the net is well-formed.
std::vector<std::string> validate_net(const NetDef& net);

/// All enabled (transition, binding) pairs in deterministic order:
/// transitions by id, token choices by ascending token-id tuples.
/// Bindings never use one token twice even when ports share a place.
std::vector<Binding> enabled_bindings(const NetDef& net, const Marking& m);

/// Output values of an expression-bodied transition under a binding.
PortValues eval_body(const Transition& t, const PortValues& binding);

/// Pure firing: consume the binding's tokens, add `produced` (one value
/// per out-port, type-checked). Throws stale_binding if a token is gone.
Marking fire(const NetDef& net, const Marking& m, const Binding& b,
             const PortValues& produced);

/// In-place halves of `fire` used by the executor's three-phase model:
/// tokens leave at dispatch, results enter at completion.
void consume(Marking& m, const NetDef& net, const Binding& b);
std::vector<std::uint64_t> produce(Marking& m, const NetDef& net,
                                   const Transition& t,
                                   const PortValues& produced);

/// Breadth-first exploration of the firing relation (expression-bodied
/// nets only), deduplicating markings up to token identity.
struct StateGraph {
  std::vector<Marking> states;
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> edges;
  bool complete = true;  // false when the state bound was hit

  std::vector<std::size_t> terminal_states() const;
};
StateGraph state_graph(const NetDef& net, const Marking& initial,
                       std::size_t max_states);

}  // namespace petrinet
