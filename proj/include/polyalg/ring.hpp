#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyalg/monomial.hpp"
#include "polyalg/prime_field.hpp"

namespace polyalg {

struct ring_mismatch : std::invalid_argument {
  ring_mismatch() : std::invalid_argument("polynomials from different rings") {}
};

/// Immutable descriptor of F_p[x_1,...,x_n] with a fixed global monomial
/// order. Cheap to copy (shared), safe to use across threads.
class Ring {
 public:
  Ring(PrimeField field, std::vector<std::string> vars,
       OrderKind order = OrderKind::degrevlex);

  const PrimeField& field() const { return data_->field; }
  std::size_t var_count() const { return data_->vars.size(); }
  const std::string& var_name(std::size_t i) const { return data_->vars[i]; }
  const std::vector<std::string>& var_names() const { return data_->vars; }
  std::optional<std::size_t> var_index(const std::string& name) const;
  OrderKind order() const { return data_->order; }

  /// Same ring in the structural sense: characteristic, variables, order.
  bool compatible_with(const Ring& o) const;
  void require_compatible(const Ring& o) const {
    if (!compatible_with(o)) throw ring_mismatch();
  }

  /// Ring with one extra variable appended (last, hence cheapest in
  /// degrevlex). The name is derived from `base` and guaranteed fresh.
  Ring extended(const std::string& base, OrderKind order) const;

  /// Ring with variable i removed (dehomogenization target).
  Ring without_variable(std::size_t i) const;

 private:
  struct Data {
    PrimeField field;
    std::vector<std::string> vars;
    OrderKind order;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace polyalg
