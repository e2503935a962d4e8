#pragma once

#include <cstdint>
#include <stdexcept>

namespace polyalg {

/// Arithmetic in F_p for an odd prime modulus p, 2 < p < 2^31.
/// Elements are represented canonically in [0, p); all intermediate
/// products fit into 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;

  /// Canonical representative of an arbitrary signed 64-bit integer.
  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  /// Deterministic Miller-Rabin, exact for the full 32-bit range.
  static bool is_prime(std::uint64_t n);

 private:
  std::uint32_t p_;
};

}  // namespace polyalg
