#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "polyalg/poly.hpp"

namespace groebner {

using polyalg::Poly;
using polyalg::Ring;

/// A reduced Groebner basis: elements are monic, no leading monomial
/// divides another, every tail is fully reduced, and the list is sorted
/// ascending by leading monomial. The unit ideal is represented as {1},
/// the zero ideal as {}.
struct GroebnerBasis {
  std::vector<Poly> elements;

  bool is_unit_ideal() const {
    return elements.size() == 1 && elements[0].is_constant() &&
           !elements[0].is_zero();
  }
  bool empty() const { return elements.empty(); }
};

/// An ideal given by generators, with a lazily computed, cached reduced
/// Groebner basis. Values share state: copies are cheap and the cache is
/// written once (first computation wins).
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Poly> gens);

  const Ring& ring() const { return data_->ring; }
  const std::vector<Poly>& gens() const { return data_->gens; }

  const GroebnerBasis& basis() const;

  /// New ideal with extra generators appended (fresh cache).
  Ideal with_appended(const std::vector<Poly>& extra) const;
  /// Same ideal mapped into an extension ring.
  Ideal lifted(const Ring& bigger) const;

  bool is_zero_ideal() const { return data_->gens.empty(); }
  bool is_unit_ideal() const { return basis().is_unit_ideal(); }

  /// Equality of ideals (compares reduced bases; triggers computation).
  bool same_ideal_as(const Ideal& o) const;

 private:
  struct Data {
    Ring ring;
    std::vector<Poly> gens;
    mutable std::mutex mu;
    mutable std::shared_ptr<const GroebnerBasis> gb;
    Data(Ring r, std::vector<Poly> g)
        : ring(std::move(r)), gens(std::move(g)) {}
  };
  std::shared_ptr<Data> data_;
};

/// Remainder of multivariate division of f by the basis; zero iff f lies
/// in the ideal the basis generates. Deterministic: the first basis
/// element (ascending leading-monomial order) whose leading monomial
/// divides wins each step.
Poly normal_form(const Poly& f, const GroebnerBasis& basis);
Poly normal_form(const Poly& f, const std::vector<Poly>& basis);

/// Reduced Groebner basis of the ideal generated by `gens`.
GroebnerBasis buchberger(const Ring& ring, const std::vector<Poly>& gens);

}  // namespace groebner
