#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace petrinet {

/// Token color (type). Recursively built from unit, int, bool, lists,
/// records and opaque payload references; record field names are unique.
/// Values are immutable and shared.
class ColorType {
 public:
  enum class Kind { unit, integer, boolean, list, record, opaque };

  static ColorType unit();
  static ColorType integer();
  static ColorType boolean();
  static ColorType list(ColorType elem);
  static ColorType record(std::vector<std::pair<std::string, ColorType>> fs);
  static ColorType opaque(std::string tag);

  Kind kind() const { return node_->kind; }
  const ColorType& elem() const;
  std::vector<std::pair<std::string, ColorType>> fields() const;
  const ColorType* field(const std::string& name) const;
  const std::string& tag() const;

  bool operator==(const ColorType& o) const;
  bool operator!=(const ColorType& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    std::vector<ColorType> children;
    std::vector<std::string> names;  // record field names
    std::string tag;                 // opaque tag
  };
  explicit ColorType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// A token's data value. Opaque values carry a shared payload pointer and
/// a reference id used in traces; two opaques are equal iff they share
/// the payload.
class Value {
 public:
  struct Opaque {
    std::string tag;
    std::uint64_t ref = 0;
    std::shared_ptr<const void> payload;
  };
  using List = std::vector<Value>;
  using Record = std::vector<std::pair<std::string, Value>>;

  static Value unit();
  static Value integer(std::int64_t v);
  static Value boolean(bool v);
  static Value list(List items);
  static Value record(Record fields);
  static Value opaque(std::string tag, std::shared_ptr<const void> payload);

  ColorType::Kind kind() const { return kind_; }
  std::int64_t as_int() const;
  bool as_bool() const;
  const List& as_list() const;
  const Record& as_record() const;
  const Value& field(const std::string& name) const;
  const Opaque& as_opaque() const;

  /// Dynamic type check against a color.
  bool conforms(const ColorType& c) const;

  bool operator==(const Value& o) const;
  bool operator!=(const Value& o) const { return !(*this == o); }

  nlohmann::json to_json() const;
  /// Token-id independent canonical form (state-graph deduplication).
  std::string canonical() const;

 private:
  ColorType::Kind kind_ = ColorType::Kind::unit;
  std::int64_t int_ = 0;
  bool bool_ = false;
  std::shared_ptr<const List> list_;
  std::shared_ptr<const Record> record_;
  std::shared_ptr<const Opaque> opaque_;
};

/// Typed helper for extracting an opaque payload.
template <typename T>
std::shared_ptr<const T> opaque_payload(const Value& v,
                                        const std::string& expected_tag) {
  const auto& o = v.as_opaque();
  if (o.tag != expected_tag)
    throw std::runtime_error("opaque tag mismatch: expected " + expected_tag +
                             ", got " + o.tag);
  return std::static_pointer_cast<const T>(o.payload);
}

struct Token {
  std::uint64_t id = 0;
  Value value;
};

}  // namespace petrinet
