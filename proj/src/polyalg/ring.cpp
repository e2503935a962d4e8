#include "polyalg/ring.hpp"

#include <algorithm>
#include <set>

namespace polyalg {

Ring::Ring(PrimeField field, std::vector<std::string> vars, OrderKind order) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate variable name: " + v);
  }
  data_ = std::make_shared<const Data>(Data{field, std::move(vars), order});
}

std::optional<std::size_t> Ring::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < data_->vars.size(); ++i)
    if (data_->vars[i] == name) return i;
  return std::nullopt;
}

bool Ring::compatible_with(const Ring& o) const {
  if (data_ == o.data_) return true;
  return data_->field == o.data_->field && data_->order == o.data_->order &&
         data_->vars == o.data_->vars;
}

Ring Ring::extended(const std::string& base, OrderKind order) const {
  std::string name = base;
  int k = 1;
  while (var_index(name)) name = base + std::to_string(k++);
  std::vector<std::string> vars = data_->vars;
  vars.push_back(name);
  return Ring(data_->field, std::move(vars), order);
}

Ring Ring::without_variable(std::size_t i) const {
  std::vector<std::string> vars;
  vars.reserve(data_->vars.size() - 1);
  for (std::size_t k = 0; k < data_->vars.size(); ++k)
    if (k != i) vars.push_back(data_->vars[k]);
  return Ring(data_->field, std::move(vars), data_->order);
}

}  // namespace polyalg
