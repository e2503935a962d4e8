#include "polyalg/monomial.hpp"

#include <algorithm>

namespace polyalg {

namespace {

std::uint16_t checked_add(std::uint16_t a, std::uint16_t b) {
  std::uint32_t s = static_cast<std::uint32_t>(a) + b;
  if (s > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
  return static_cast<std::uint16_t>(s);
}

}  // namespace

Monomial::Monomial(std::vector<std::uint16_t> exps) : e_(std::move(exps)) {
  std::int32_t d = 0;
  for (auto x : e_) d += x;
  deg_ = d;
}

Monomial Monomial::times(const Monomial& o) const {
  std::vector<std::uint16_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i)
    r[i] = checked_add(e_[i], o.e_[i]);
  return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  std::vector<std::uint16_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (o.e_[i] > e_[i]) throw std::domain_error("monomial division fails");
    r[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  }
  return Monomial(std::move(r));
}

Monomial Monomial::lcm(const Monomial& o) const {
  std::vector<std::uint16_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = std::max(e_[i], o.e_[i]);
  return Monomial(std::move(r));
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != 0 && o.e_[i] != 0) return false;
  return true;
}

Monomial Monomial::without_variable(std::size_t i) const {
  std::vector<std::uint16_t> r;
  r.reserve(e_.size() - 1);
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (k != i) r.push_back(e_[k]);
  return Monomial(std::move(r));
}

Monomial Monomial::extended(std::size_t extra) const {
  std::vector<std::uint16_t> r = e_;
  r.insert(r.end(), extra, 0);
  return Monomial(std::move(r));
}

namespace {

// a > b iff deg a > deg b, or degrees tie and the last index where the
// exponents differ has the smaller exponent in a.
int degrevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a.exponent(i) != b.exponent(i))
      return a.exponent(i) > b.exponent(i) ? -1 : 1;
  }
  return 0;
}

}  // namespace

int monomial_cmp(const Monomial& a, const Monomial& b, OrderKind order) {
  switch (order) {
    case OrderKind::degrevlex:
      return degrevlex_cmp(a, b);
    case OrderKind::elim_last: {
      std::size_t last = a.nvars() - 1;
      if (a.exponent(last) != b.exponent(last))
        return a.exponent(last) < b.exponent(last) ? -1 : 1;
      return degrevlex_cmp(a, b);
    }
  }
  return 0;
}

}  // namespace polyalg
