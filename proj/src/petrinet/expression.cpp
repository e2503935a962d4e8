#include "petrinet/expression.hpp"

#include <sstream>

namespace petrinet {

Expr Expr::port(std::string port, std::vector<std::string> path) {
  Expr e;
  e.op_ = Op::port_field;
  e.port_ = std::move(port);
  e.path_ = std::move(path);
  return e;
}

Expr Expr::lit(std::int64_t v) {
  Expr e;
  e.op_ = Op::int_lit;
  e.int_ = v;
  return e;
}

Expr Expr::truth(bool v) {
  Expr e;
  e.op_ = Op::bool_lit;
  e.bool_ = v;
  return e;
}

Expr Expr::binary(Op op, Expr a, Expr b) {
  Expr e;
  e.op_ = op;
  e.kids_.push_back(std::move(a));
  e.kids_.push_back(std::move(b));
  return e;
}

Expr Expr::unary(Op op, Expr a) {
  Expr e;
  e.op_ = op;
  e.kids_.push_back(std::move(a));
  return e;
}

std::optional<ColorType> Expr::infer(
    const std::map<std::string, ColorType>& ports,
    std::vector<std::string>& errors) const {
  auto fail = [&](const std::string& msg) -> std::optional<ColorType> {
    errors.push_back(msg + " in '" + to_string() + "'");
    return std::nullopt;
  };
  switch (op_) {
    case Op::port_field: {
      auto it = ports.find(port_);
      if (it == ports.end()) return fail("unknown port '" + port_ + "'");
      ColorType cur = it->second;
      for (const auto& f : path_) {
        const ColorType* next = cur.field(f);
        if (!next) return fail("no field '" + f + "'");
        cur = *next;
      }
      return cur;
    }
    case Op::int_lit:
      return ColorType::integer();
    case Op::bool_lit:
      return ColorType::boolean();
    case Op::add:
    case Op::sub:
    case Op::mul: {
      auto a = kids_[0].infer(ports, errors);
      auto b = kids_[1].infer(ports, errors);
      if (!a || !b) return std::nullopt;
      if (*a != ColorType::integer() || *b != ColorType::integer())
        return fail("arithmetic needs int operands");
      return ColorType::integer();
    }
    case Op::eq:
    case Op::ne: {
      auto a = kids_[0].infer(ports, errors);
      auto b = kids_[1].infer(ports, errors);
      if (!a || !b) return std::nullopt;
      if (*a != *b) return fail("comparison of different types");
      if (*a != ColorType::integer() && *a != ColorType::boolean())
        return fail("equality needs int or bool operands");
      return ColorType::boolean();
    }
    case Op::lt: {
      auto a = kids_[0].infer(ports, errors);
      auto b = kids_[1].infer(ports, errors);
      if (!a || !b) return std::nullopt;
      if (*a != ColorType::integer() || *b != ColorType::integer())
        return fail(":lt: needs int operands");
      return ColorType::boolean();
    }
    case Op::head: {
      auto a = kids_[0].infer(ports, errors);
      if (!a) return std::nullopt;
      if (a->kind() != ColorType::Kind::list)
        return fail("head needs a list");
      return a->elem();
    }
    case Op::tail: {
      auto a = kids_[0].infer(ports, errors);
      if (!a) return std::nullopt;
      if (a->kind() != ColorType::Kind::list)
        return fail("tail needs a list");
      return *a;
    }
    case Op::empty_test: {
      auto a = kids_[0].infer(ports, errors);
      if (!a) return std::nullopt;
      if (a->kind() != ColorType::Kind::list)
        return fail("empty needs a list");
      return ColorType::boolean();
    }
  }
  return std::nullopt;
}

std::string Expr::to_string() const {
  std::ostringstream out;
  switch (op_) {
    case Op::port_field:
      out << "${" << port_;
      for (const auto& f : path_) out << "." << f;
      out << "}";
      break;
    case Op::int_lit:
      out << int_;
      break;
    case Op::bool_lit:
      out << (bool_ ? "true" : "false");
      break;
    case Op::add:
    case Op::sub:
    case Op::mul: {
      const char* sym = op_ == Op::add ? "+" : op_ == Op::sub ? "-" : "*";
      out << "(" << kids_[0].to_string() << " " << sym << " "
          << kids_[1].to_string() << ")";
      break;
    }
    case Op::eq:
    case Op::ne:
    case Op::lt: {
      const char* sym =
          op_ == Op::eq ? ":eq:" : op_ == Op::ne ? ":ne:" : ":lt:";
      out << "(" << kids_[0].to_string() << " " << sym << " "
          << kids_[1].to_string() << ")";
      break;
    }
    case Op::head:
      out << "head(" << kids_[0].to_string() << ")";
      break;
    case Op::tail:
      out << "tail(" << kids_[0].to_string() << ")";
      break;
    case Op::empty_test:
      out << "empty(" << kids_[0].to_string() << ")";
      break;
  }
  return out.str();
}

std::string Assign::to_string() const {
  std::ostringstream out;
  out << "${" << port;
  for (const auto& f : path) out << "." << f;
  out << "} := " << value.to_string();
  return out.str();
}

Value eval(const Expr& expr, const PortValues& binding) {
  switch (expr.op()) {
    case Expr::Op::port_field: {
      auto it = binding.find(expr.port_name());
      if (it == binding.end())
        throw eval_error("unbound port '" + expr.port_name() + "'");
      const Value* cur = &it->second;
      for (const auto& f : expr.path()) cur = &cur->field(f);
      return *cur;
    }
    case Expr::Op::int_lit:
      return Value::integer(expr.int_value());
    case Expr::Op::bool_lit:
      return Value::boolean(expr.bool_value());
    case Expr::Op::add:
    case Expr::Op::sub:
    case Expr::Op::mul: {
      std::int64_t a = eval(expr.child(0), binding).as_int();
      std::int64_t b = eval(expr.child(1), binding).as_int();
      std::int64_t r = 0;
      bool overflow = false;
      switch (expr.op()) {
        case Expr::Op::add:
          overflow = __builtin_add_overflow(a, b, &r);
          break;
        case Expr::Op::sub:
          overflow = __builtin_sub_overflow(a, b, &r);
          break;
        default:
          overflow = __builtin_mul_overflow(a, b, &r);
          break;
      }
      if (overflow)
        throw eval_error("integer overflow in " + expr.to_string());
      return Value::integer(r);
    }
    case Expr::Op::eq:
      return Value::boolean(eval(expr.child(0), binding) ==
                            eval(expr.child(1), binding));
    case Expr::Op::ne:
      return Value::boolean(eval(expr.child(0), binding) !=
                            eval(expr.child(1), binding));
    case Expr::Op::lt:
      return Value::boolean(eval(expr.child(0), binding).as_int() <
                            eval(expr.child(1), binding).as_int());
    case Expr::Op::head: {
      const auto& l = eval(expr.child(0), binding).as_list();
      if (l.empty()) throw eval_error("head of empty list");
      return l.front();
    }
    case Expr::Op::tail: {
      auto l = eval(expr.child(0), binding).as_list();
      if (l.empty()) throw eval_error("tail of empty list");
      l.erase(l.begin());
      return Value::list(std::move(l));
    }
    case Expr::Op::empty_test:
      return Value::boolean(eval(expr.child(0), binding).as_list().empty());
  }
  throw eval_error("unhandled expression");
}

}  // namespace petrinet
