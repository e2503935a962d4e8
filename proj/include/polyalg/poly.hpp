#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polyalg/ring.hpp"

namespace polyalg {

/// Sparse multivariate polynomial over F_p. Terms are kept sorted in
/// strictly descending monomial order with nonzero coefficients; the zero
/// polynomial has no terms. Immutable in practice: all operations return
/// new values, so sharing across threads is safe.
class Poly {
 public:
  struct Term {
    Monomial mono;
    std::uint32_t coeff;  // in [1, p)
  };

  explicit Poly(Ring ring) : ring_(std::move(ring)) {}

  static Poly zero(const Ring& r) { return Poly(r); }
  static Poly constant(const Ring& r, std::int64_t c);
  static Poly variable(const Ring& r, std::size_t i);
  static Poly monomial(const Ring& r, Monomial m, std::int64_t c);
  /// Normalizes: merges duplicate monomials, drops zeros, sorts.
  static Poly from_terms(const Ring& r, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() &&
           terms_[0].coeff == 1;
  }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Monomial& leading_monomial() const;
  std::uint32_t leading_coeff() const;
  std::int32_t total_degree() const;  // -1 for zero

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(std::uint32_t c) const;
  Poly monic() const;
  Poly pow(unsigned e) const;

  /// this - c * m * g, the workhorse of polynomial reduction.
  Poly sub_scaled(std::uint32_t c, const Monomial& m, const Poly& g) const;
  Poly times_monomial(std::uint32_t c, const Monomial& m) const;

  /// Formal partial derivative with respect to variable j (0-based).
  Poly derivative(std::size_t j) const;

  /// True if every term has the same total degree (zero counts as
  /// homogeneous).
  bool is_homogeneous() const;

  /// Image in an extension of this ring by extra trailing variables.
  Poly lifted(const Ring& bigger) const;
  /// Image under x_i = 1 in the ring with variable i removed.
  Poly dehomogenized(const Ring& smaller, std::size_t i) const;
  /// Reinterpret in `target` (same variables/characteristic, e.g. a
  /// different order); re-sorts terms.
  Poly reordered(const Ring& target) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Canonical text form; parsing it back yields the same polynomial.
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

/// True exact divisibility f | g with quotient recovery; used for the
/// det(M) | q shortcut. Returns false if f is zero.
bool divides_exactly(const Poly& f, const Poly& g);

}  // namespace polyalg
