#include "groebner/predicates.hpp"

#include <algorithm>

#include "polyalg/monomial.hpp"

namespace groebner {

using polyalg::Monomial;
using polyalg::OrderKind;

bool ideal_membership(const Poly& f, const Ideal& I) {
  I.ring().require_compatible(f.ring());
  if (f.is_zero()) return true;
  return normal_form(f, I.basis()).is_zero();
}

bool radical_membership(const Poly& f, const Ideal& I) {
  I.ring().require_compatible(f.ring());
  if (f.is_zero()) return true;
  Ring ext = I.ring().extended("t", I.ring().order());
  std::vector<Poly> gens;
  gens.reserve(I.gens().size() + 1);
  for (const auto& g : I.gens()) gens.push_back(g.lifted(ext));
  Poly t = Poly::variable(ext, ext.var_count() - 1);
  gens.push_back(t * f.lifted(ext) - Poly::constant(ext, 1));
  return buchberger(ext, gens).is_unit_ideal();
}

int ideal_dimension(const Ideal& I) {
  const GroebnerBasis& gb = I.basis();
  if (gb.is_unit_ideal()) return -1;
  std::size_t n = I.ring().var_count();
  if (gb.empty()) return static_cast<int>(n);
  if (n > 24) throw std::invalid_argument("too many variables for dimension");

  std::vector<std::uint32_t> supports;
  supports.reserve(gb.elements.size());
  for (const auto& g : gb.elements) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.leading_monomial().exponent(i) > 0) s |= (1U << i);
    supports.push_back(s);
  }
  // Largest S such that no leading monomial involves only variables of S.
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool independent = true;
    for (std::uint32_t s : supports)
      if ((s & ~mask) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

namespace {

// Generators of (J in the elim_last ring) intersected with the base
// ring: basis elements whose leading monomial (hence the whole element,
// by the block order) avoids the last variable.
std::vector<Poly> eliminate_last(const Ring& ext, const Ring& base,
                                 const std::vector<Poly>& gens) {
  GroebnerBasis gb = buchberger(ext, gens);
  std::size_t t_index = ext.var_count() - 1;
  std::vector<Poly> out;
  for (const auto& g : gb.elements) {
    if (g.leading_monomial().exponent(t_index) != 0) continue;
    out.push_back(g.dehomogenized(base, t_index));
  }
  return out;
}

}  // namespace

Ideal saturate(const Ideal& I, const Poly& q) {
  I.ring().require_compatible(q.ring());
  if (q.is_zero())
    throw std::invalid_argument("saturation by the zero polynomial");
  Ring ext = I.ring().extended("t", OrderKind::elim_last);
  std::vector<Poly> gens;
  gens.reserve(I.gens().size() + 1);
  for (const auto& g : I.gens()) gens.push_back(g.lifted(ext));
  Poly t = Poly::variable(ext, ext.var_count() - 1);
  gens.push_back(t * q.lifted(ext) - Poly::constant(ext, 1));
  return Ideal(I.ring(), eliminate_last(ext, I.ring(), gens));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  I.ring().require_compatible(J.ring());
  Ring ext = I.ring().extended("t", OrderKind::elim_last);
  Poly t = Poly::variable(ext, ext.var_count() - 1);
  Poly one_minus_t = Poly::constant(ext, 1) - t;
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(t * g.lifted(ext));
  for (const auto& g : J.gens()) gens.push_back(one_minus_t * g.lifted(ext));
  return Ideal(I.ring(), eliminate_last(ext, I.ring(), gens));
}

}  // namespace groebner
