#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "petrinet/color.hpp"

namespace petrinet {

struct eval_error : std::runtime_error {
  explicit eval_error(const std::string& m) : std::runtime_error(m) {}
};

/// Port name -> value environment of one binding.
using PortValues = std::map<std::string, Value>;

/// Minimal typed expression language over port fields: literals,
/// integer arithmetic, comparisons (:eq:, :ne:, :lt:) and list
/// head/tail/empty. Conditions and transition bodies are built from it.
class Expr {
 public:
  enum class Op {
    port_field,  // ${port} or ${port.a.b}
    int_lit,
    bool_lit,
    add,
    sub,
    mul,
    eq,
    ne,
    lt,
    head,
    tail,
    empty_test,
  };

  static Expr port(std::string port, std::vector<std::string> path = {});
  static Expr lit(std::int64_t v);
  static Expr truth(bool v);
  static Expr add(Expr a, Expr b) { return binary(Op::add, a, b); }
  static Expr sub(Expr a, Expr b) { return binary(Op::sub, a, b); }
  static Expr mul(Expr a, Expr b) { return binary(Op::mul, a, b); }
  static Expr eq(Expr a, Expr b) { return binary(Op::eq, a, b); }
  static Expr ne(Expr a, Expr b) { return binary(Op::ne, a, b); }
  static Expr lt(Expr a, Expr b) { return binary(Op::lt, a, b); }
  static Expr head(Expr list) { return unary(Op::head, std::move(list)); }
  static Expr tail(Expr list) { return unary(Op::tail, std::move(list)); }
  static Expr empty(Expr list) {
    return unary(Op::empty_test, std::move(list));
  }

  Op op() const { return op_; }
  const std::string& port_name() const { return port_; }
  const std::vector<std::string>& path() const { return path_; }
  std::int64_t int_value() const { return int_; }
  bool bool_value() const { return bool_; }
  const Expr& child(std::size_t i) const { return kids_[i]; }
  std::size_t arity() const { return kids_.size(); }

  /// Static type of the expression in an environment of port colors, or
  /// nullopt with a message pushed to `errors`.
  std::optional<ColorType> infer(
      const std::map<std::string, ColorType>& ports,
      std::vector<std::string>& errors) const;

  std::string to_string() const;

 private:
  static Expr binary(Op op, Expr a, Expr b);
  static Expr unary(Op op, Expr a);

  Op op_ = Op::int_lit;
  std::string port_;
  std::vector<std::string> path_;
  std::int64_t int_ = 0;
  bool bool_ = false;
  std::vector<Expr> kids_;
};

/// `${port.path} := value`; an empty path assigns the whole out-port.
struct Assign {
  std::string port;
  std::vector<std::string> path;
  Expr value;

  std::string to_string() const;
};

/// Strict evaluation against a binding; throws eval_error on overflow or
/// head/tail of an empty list.
Value eval(const Expr& expr, const PortValues& binding);

}  // namespace petrinet
