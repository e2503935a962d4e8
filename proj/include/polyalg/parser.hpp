#pragma once

#include <string>

#include "polyalg/poly.hpp"

namespace polyalg {

struct parse_error : std::runtime_error {
  std::size_t position;
  parse_error(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg) + " (at position " +
                           std::to_string(pos) + ")"),
        position(pos) {}
};

/// Parses the shared polynomial grammar:
///
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' integer)?
///   atom   := integer | identifier | '(' expr ')' | '-' factor
///
/// '^' binds tightest; identifiers must be ring variables; integer
/// coefficients are reduced mod p.
Poly poly_parse(const std::string& text, const Ring& ring);

}  // namespace polyalg
