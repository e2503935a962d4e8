#include "petrinet/color.hpp"

#include <atomic>
#include <set>
#include <sstream>

namespace petrinet {

ColorType ColorType::unit() {
  static const auto n = std::make_shared<const Node>(Node{Kind::unit, {}, {}, ""});
  return ColorType(n);
}

ColorType ColorType::integer() {
  static const auto n =
      std::make_shared<const Node>(Node{Kind::integer, {}, {}, ""});
  return ColorType(n);
}

ColorType ColorType::boolean() {
  static const auto n =
      std::make_shared<const Node>(Node{Kind::boolean, {}, {}, ""});
  return ColorType(n);
}

ColorType ColorType::list(ColorType elem) {
  return ColorType(std::make_shared<const Node>(
      Node{Kind::list, {std::move(elem)}, {}, ""}));
}

ColorType ColorType::record(
    std::vector<std::pair<std::string, ColorType>> fs) {
  std::set<std::string> seen;
  Node n{Kind::record, {}, {}, ""};
  for (auto& [name, type] : fs) {
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate record field: " + name);
    n.names.push_back(name);
    n.children.push_back(type);
  }
  return ColorType(std::make_shared<const Node>(std::move(n)));
}

ColorType ColorType::opaque(std::string tag) {
  return ColorType(
      std::make_shared<const Node>(Node{Kind::opaque, {}, {}, std::move(tag)}));
}

const ColorType& ColorType::elem() const {
  if (node_->kind != Kind::list)
    throw std::logic_error("elem() on non-list color");
  return node_->children[0];
}

std::vector<std::pair<std::string, ColorType>> ColorType::fields() const {
  if (node_->kind != Kind::record)
    throw std::logic_error("fields() on non-record color");
  std::vector<std::pair<std::string, ColorType>> out;
  out.reserve(node_->names.size());
  for (std::size_t i = 0; i < node_->names.size(); ++i)
    out.emplace_back(node_->names[i], node_->children[i]);
  return out;
}

const ColorType* ColorType::field(const std::string& name) const {
  if (node_->kind != Kind::record) return nullptr;
  for (std::size_t i = 0; i < node_->names.size(); ++i)
    if (node_->names[i] == name) return &node_->children[i];
  return nullptr;
}

const std::string& ColorType::tag() const {
  if (node_->kind != Kind::opaque)
    throw std::logic_error("tag() on non-opaque color");
  return node_->tag;
}

bool ColorType::operator==(const ColorType& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  if (node_->tag != o.node_->tag) return false;
  if (node_->names != o.node_->names) return false;
  if (node_->children.size() != o.node_->children.size()) return false;
  for (std::size_t i = 0; i < node_->children.size(); ++i)
    if (!(node_->children[i] == o.node_->children[i])) return false;
  return true;
}

std::string ColorType::to_string() const {
  switch (node_->kind) {
    case Kind::unit:
      return "unit";
    case Kind::integer:
      return "int";
    case Kind::boolean:
      return "bool";
    case Kind::list:
      return "list<" + node_->children[0].to_string() + ">";
    case Kind::record: {
      std::ostringstream out;
      out << "record{";
      for (std::size_t i = 0; i < node_->names.size(); ++i) {
        if (i) out << ",";
        out << node_->names[i] << ":" << node_->children[i].to_string();
      }
      out << "}";
      return out.str();
    }
    case Kind::opaque:
      return "opaque<" + node_->tag + ">";
  }
  return "?";
}

namespace {
std::atomic<std::uint64_t> opaque_ref_counter{1};
}

Value Value::unit() { return Value(); }

Value Value::integer(std::int64_t v) {
  Value x;
  x.kind_ = ColorType::Kind::integer;
  x.int_ = v;
  return x;
}

Value Value::boolean(bool v) {
  Value x;
  x.kind_ = ColorType::Kind::boolean;
  x.bool_ = v;
  return x;
}

Value Value::list(List items) {
  Value x;
  x.kind_ = ColorType::Kind::list;
  x.list_ = std::make_shared<const List>(std::move(items));
  return x;
}

Value Value::record(Record fields) {
  Value x;
  x.kind_ = ColorType::Kind::record;
  x.record_ = std::make_shared<const Record>(std::move(fields));
  return x;
}

Value Value::opaque(std::string tag, std::shared_ptr<const void> payload) {
  Value x;
  x.kind_ = ColorType::Kind::opaque;
  x.opaque_ = std::make_shared<const Opaque>(Opaque{
      std::move(tag), opaque_ref_counter.fetch_add(1), std::move(payload)});
  return x;
}

std::int64_t Value::as_int() const {
  if (kind_ != ColorType::Kind::integer)
    throw std::logic_error("value is not an int");
  return int_;
}

bool Value::as_bool() const {
  if (kind_ != ColorType::Kind::boolean)
    throw std::logic_error("value is not a bool");
  return bool_;
}

const Value::List& Value::as_list() const {
  if (kind_ != ColorType::Kind::list)
    throw std::logic_error("value is not a list");
  return *list_;
}

const Value::Record& Value::as_record() const {
  if (kind_ != ColorType::Kind::record)
    throw std::logic_error("value is not a record");
  return *record_;
}

const Value& Value::field(const std::string& name) const {
  for (const auto& [k, v] : as_record())
    if (k == name) return v;
  throw std::out_of_range("record has no field '" + name + "'");
}

const Value::Opaque& Value::as_opaque() const {
  if (kind_ != ColorType::Kind::opaque)
    throw std::logic_error("value is not opaque");
  return *opaque_;
}

bool Value::conforms(const ColorType& c) const {
  if (kind_ != c.kind()) return false;
  switch (kind_) {
    case ColorType::Kind::unit:
    case ColorType::Kind::integer:
    case ColorType::Kind::boolean:
      return true;
    case ColorType::Kind::list: {
      for (const auto& v : *list_)
        if (!v.conforms(c.elem())) return false;
      return true;
    }
    case ColorType::Kind::record: {
      const auto& rec = *record_;
      if (rec.size() != c.fields().size()) return false;
      for (const auto& [name, v] : rec) {
        const ColorType* ft = c.field(name);
        if (!ft || !v.conforms(*ft)) return false;
      }
      return true;
    }
    case ColorType::Kind::opaque:
      return opaque_->tag == c.tag();
  }
  return false;
}

bool Value::operator==(const Value& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case ColorType::Kind::unit:
      return true;
    case ColorType::Kind::integer:
      return int_ == o.int_;
    case ColorType::Kind::boolean:
      return bool_ == o.bool_;
    case ColorType::Kind::list:
      return *list_ == *o.list_;
    case ColorType::Kind::record:
      return *record_ == *o.record_;
    case ColorType::Kind::opaque:
      return opaque_->payload == o.opaque_->payload;
  }
  return false;
}

nlohmann::json Value::to_json() const {
  switch (kind_) {
    case ColorType::Kind::unit:
      return nullptr;
    case ColorType::Kind::integer:
      return int_;
    case ColorType::Kind::boolean:
      return bool_;
    case ColorType::Kind::list: {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& v : *list_) a.push_back(v.to_json());
      return a;
    }
    case ColorType::Kind::record: {
      nlohmann::json o = nlohmann::json::object();
      for (const auto& [k, v] : *record_) o[k] = v.to_json();
      return o;
    }
    case ColorType::Kind::opaque:
      return {{"$opaque", opaque_->tag}, {"ref", opaque_->ref}};
  }
  return nullptr;
}

std::string Value::canonical() const {
  if (kind_ == ColorType::Kind::opaque)
    return "opaque:" + opaque_->tag + "#" + std::to_string(opaque_->ref);
  return to_json().dump();
}

}  // namespace petrinet
