#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polyalg/parser.hpp"
#include "polyalg/poly.hpp"

namespace testutil {

inline polyalg::Ring make_ring(std::uint32_t p,
                               std::vector<std::string> vars) {
  return polyalg::Ring(polyalg::PrimeField(p), std::move(vars));
}

inline polyalg::Monomial random_monomial(std::mt19937& rng,
                                         std::size_t nvars, int max_exp) {
  std::uniform_int_distribution<int> d(0, max_exp);
  std::vector<std::uint16_t> e(nvars);
  for (auto& x : e) x = static_cast<std::uint16_t>(d(rng));
  return polyalg::Monomial(std::move(e));
}

inline polyalg::Poly random_poly(std::mt19937& rng, const polyalg::Ring& R,
                                 int max_terms = 5, int max_exp = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<std::int64_t> coeff(
      0, static_cast<std::int64_t>(R.field().modulus()) - 1);
  std::vector<polyalg::Poly::Term> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    auto m = random_monomial(rng, R.var_count(), max_exp);
    auto c = R.field().reduce(coeff(rng));
    if (c != 0) terms.push_back({m, c});
  }
  return polyalg::Poly::from_terms(R, std::move(terms));
}

}  // namespace testutil
