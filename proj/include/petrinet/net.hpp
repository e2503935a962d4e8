#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "petrinet/expression.hpp"

namespace petrinet {

struct Place {
  std::string id;
  std::string name;
  ColorType color;
};

/// A typed connection point of a transition. Ports carry the color the
/// transition expects; validation requires it to match the place color.
struct PortDef {
  std::string name;
  ColorType color;
  std::string place;
};

enum class BodyKind { expression, task };

struct Transition {
  std::string id;
  std::string name;
  std::vector<PortDef> in_ports;
  std::vector<PortDef> out_ports;
  std::optional<Expr> condition;
  BodyKind body = BodyKind::expression;
  std::vector<Assign> assigns;  // expression body
  std::string task_kind;        // task body: registry key

  const PortDef* in_port(const std::string& name) const;
  const PortDef* out_port(const std::string& name) const;
};

/// Static structure of a colored Petri net. The flow relation is induced
/// by the ports. `heureka_place` marks the output place whose first token
/// triggers global early termination in the executor.
struct NetDef {
  std::vector<Place> places;
  std::vector<Transition> transitions;
  std::optional<std::string> heureka_place;
  nlohmann::json meta = nlohmann::json::object();

  const Place* find_place(const std::string& id) const;
  const Transition* find_transition(const std::string& id) const;

  nlohmann::json to_json() const;
};

/// Multiset of tokens per place plus the token id counter. Token ids are
/// unique within one marking lineage. Values are type-checked on entry.
class Marking {
 public:
  Marking() = default;

  std::uint64_t add(const NetDef& net, const std::string& place, Value v);
  bool remove(const std::string& place, std::uint64_t token_id);
  const std::vector<Token>& at(const std::string& place) const;
  std::size_t total_tokens() const;
  bool empty() const { return total_tokens() == 0; }
  /// Removes every token except those on `keep`; returns removed ids.
  std::vector<std::uint64_t> drain_except(const std::string& keep);

  /// Token-id independent canonical form for state deduplication.
  std::string canonical() const;
  nlohmann::json to_json() const;

 private:
  std::map<std::string, std::vector<Token>> tokens_;
  std::uint64_t next_id_ = 1;
};

}  // namespace petrinet
