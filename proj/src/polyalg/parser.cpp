#include "polyalg/parser.hpp"

#include <cctype>

namespace polyalg {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Ring& ring)
      : text_(text), ring_(ring) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  const std::string& text_;
  const Ring& ring_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Poly expr() {
    bool neg = false;
    skip_ws();
    if (accept('-')) neg = true;
    Poly acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (accept('^')) {
      unsigned e = exponent();
      return base.pow(e);
    }
    return base;
  }

  unsigned exponent() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected exponent");
    unsigned long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (v > 0xFFFF) fail("exponent exceeds 16-bit limit");
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return integer();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return identifier();
    fail("expected number, variable or '('");
  }

  Poly integer() {
    // Digits are folded mod p on the fly, so arbitrarily long literals
    // reduce without overflow.
    const auto& F = ring_.field();
    std::uint32_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = F.add(F.mul(v, 10), static_cast<std::uint32_t>(text_[pos_] - '0') %
                                  F.modulus());
      ++pos_;
    }
    return Poly::constant(ring_, v);
  }

  Poly identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    auto idx = ring_.var_index(name);
    if (!idx) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    return Poly::variable(ring_, *idx);
  }
};

}  // namespace

Poly poly_parse(const std::string& text, const Ring& ring) {
  return Parser(text, ring).run();
}

}  // namespace polyalg
