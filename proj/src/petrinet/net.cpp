#include "petrinet/net.hpp"

#include <algorithm>
#include <sstream>

namespace petrinet {

const PortDef* Transition::in_port(const std::string& n) const {
  for (const auto& p : in_ports)
    if (p.name == n) return &p;
  return nullptr;
}

const PortDef* Transition::out_port(const std::string& n) const {
  for (const auto& p : out_ports)
    if (p.name == n) return &p;
  return nullptr;
}

const Place* NetDef::find_place(const std::string& id) const {
  for (const auto& p : places)
    if (p.id == id) return &p;
  return nullptr;
}

const Transition* NetDef::find_transition(const std::string& id) const {
  for (const auto& t : transitions)
    if (t.id == id) return &t;
  return nullptr;
}

nlohmann::json NetDef::to_json() const {
  nlohmann::json j;
  j["meta"] = meta;
  if (heureka_place) j["heureka_place"] = *heureka_place;
  j["places"] = nlohmann::json::array();
  for (const auto& p : places)
    j["places"].push_back(
        {{"id", p.id}, {"name", p.name}, {"color", p.color.to_string()}});
  j["transitions"] = nlohmann::json::array();
  for (const auto& t : transitions) {
    nlohmann::json tj;
    tj["id"] = t.id;
    tj["name"] = t.name;
    auto ports = [](const std::vector<PortDef>& ps) {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& p : ps)
        a.push_back({{"name", p.name},
                     {"color", p.color.to_string()},
                     {"place", p.place}});
      return a;
    };
    tj["in_ports"] = ports(t.in_ports);
    tj["out_ports"] = ports(t.out_ports);
    if (t.condition) tj["condition"] = t.condition->to_string();
    if (t.body == BodyKind::task) {
      tj["body"] = {{"task", t.task_kind}};
    } else {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& s : t.assigns) a.push_back(s.to_string());
      tj["body"] = {{"expressions", a}};
    }
    j["transitions"].push_back(tj);
  }
  return j;
}

std::uint64_t Marking::add(const NetDef& net, const std::string& place,
                           Value v) {
  const Place* p = net.find_place(place);
  if (!p) throw std::invalid_argument("no such place: " + place);
  if (!v.conforms(p->color))
    throw std::invalid_argument("token value does not match color of place " +
                                place + " (" + p->color.to_string() + ")");
  std::uint64_t id = next_id_++;
  tokens_[place].push_back(Token{id, std::move(v)});
  return id;
}

bool Marking::remove(const std::string& place, std::uint64_t token_id) {
  auto it = tokens_.find(place);
  if (it == tokens_.end()) return false;
  auto& vec = it->second;
  for (std::size_t i = 0; i < vec.size(); ++i)
    if (vec[i].id == token_id) {
      vec.erase(vec.begin() + static_cast<std::ptrdiff_t>(i));
      if (vec.empty()) tokens_.erase(it);
      return true;
    }
  return false;
}

const std::vector<Token>& Marking::at(const std::string& place) const {
  static const std::vector<Token> none;
  auto it = tokens_.find(place);
  return it == tokens_.end() ? none : it->second;
}

std::size_t Marking::total_tokens() const {
  std::size_t n = 0;
  for (const auto& [_, v] : tokens_) n += v.size();
  return n;
}

std::vector<std::uint64_t> Marking::drain_except(const std::string& keep) {
  std::vector<std::uint64_t> removed;
  for (auto it = tokens_.begin(); it != tokens_.end();) {
    if (it->first == keep) {
      ++it;
      continue;
    }
    for (const auto& t : it->second) removed.push_back(t.id);
    it = tokens_.erase(it);
  }
  return removed;
}

std::string Marking::canonical() const {
  std::ostringstream out;
  for (const auto& [place, toks] : tokens_) {
    if (toks.empty()) continue;
    std::vector<std::string> vals;
    vals.reserve(toks.size());
    for (const auto& t : toks) vals.push_back(t.value.canonical());
    std::sort(vals.begin(), vals.end());
    out << place << "=[";
    for (const auto& v : vals) out << v << ";";
    out << "] ";
  }
  return out.str();
}

nlohmann::json Marking::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [place, toks] : tokens_) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& t : toks)
      a.push_back({{"id", t.id}, {"value", t.value.to_json()}});
    j[place] = a;
  }
  return j;
}

}  // namespace petrinet
