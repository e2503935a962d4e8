#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace polyalg {

/// Global monomial orders. All orders here are compatible with
/// multiplication and have 1 as the smallest monomial.
///
/// `elim_last` is a block order that makes the last ring variable dominate;
/// it is used internally to eliminate a Rabinowitsch variable (saturation,
/// ideal intersection). User-facing rings are degrevlex.
enum class OrderKind { degrevlex, elim_last };

/// Exponent vector of fixed length (the ring's variable count).
/// Exponents are 16-bit; arithmetic checks for overflow.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<std::uint16_t> exps);

  std::size_t nvars() const { return e_.size(); }
  std::uint16_t exponent(std::size_t i) const { return e_[i]; }
  std::int32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divided_by(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  /// Set variable i to 1 and drop it from the exponent vector.
  Monomial without_variable(std::size_t i) const;
  /// Append `extra` zero exponents (for ring extensions).
  Monomial extended(std::size_t extra) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<std::uint16_t> e_;
  std::int32_t deg_;
};

/// Three-way comparison under the given order: negative if a < b,
/// zero if equal, positive if a > b.
int monomial_cmp(const Monomial& a, const Monomial& b, OrderKind order);

inline bool monomial_less(const Monomial& a, const Monomial& b,
                          OrderKind order) {
  return monomial_cmp(a, b, order) < 0;
}

}  // namespace polyalg
