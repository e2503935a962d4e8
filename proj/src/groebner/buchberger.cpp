#include <algorithm>
#include <set>

#include "groebner/budget.hpp"
#include "groebner/ideal.hpp"

namespace groebner {

using polyalg::Monomial;
using polyalg::monomial_cmp;

Ideal::Ideal(Ring ring, std::vector<Poly> gens) {
  std::vector<Poly> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    ring.require_compatible(g.ring());
    if (!g.is_zero()) kept.push_back(std::move(g));
  }
  data_ = std::make_shared<Data>(std::move(ring), std::move(kept));
}

const GroebnerBasis& Ideal::basis() const {
  {
    std::lock_guard<std::mutex> lock(data_->mu);
    if (data_->gb) return *data_->gb;
  }
  auto computed = std::make_shared<const GroebnerBasis>(
      buchberger(data_->ring, data_->gens));
  std::lock_guard<std::mutex> lock(data_->mu);
  if (!data_->gb) data_->gb = std::move(computed);
  return *data_->gb;
}

Ideal Ideal::with_appended(const std::vector<Poly>& extra) const {
  std::vector<Poly> gens = data_->gens;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(data_->ring, std::move(gens));
}

Ideal Ideal::lifted(const Ring& bigger) const {
  std::vector<Poly> gens;
  gens.reserve(data_->gens.size());
  for (const auto& g : data_->gens) gens.push_back(g.lifted(bigger));
  return Ideal(bigger, std::move(gens));
}

bool Ideal::same_ideal_as(const Ideal& o) const {
  return basis().elements == o.basis().elements;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis) {
  if (basis.empty()) return f;
  const Ring& R = f.ring();
  R.require_compatible(basis.front().ring());
  Poly p = f;
  Poly r = Poly::zero(R);
  while (!p.is_zero()) {
    checkpoint();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(p.leading_monomial())) {
        Monomial m = p.leading_monomial().divided_by(g.leading_monomial());
        // Basis elements are monic.
        p = p.sub_scaled(p.leading_coeff(), m, g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r = r + Poly::monomial(R, p.leading_monomial(), p.leading_coeff());
      p = p.sub_scaled(p.leading_coeff(), p.leading_monomial(),
                       Poly::constant(R, 1));
    }
  }
  return r;
}

Poly normal_form(const Poly& f, const GroebnerBasis& basis) {
  return normal_form(f, basis.elements);
}

namespace {

Poly s_polynomial(const Poly& f, const Poly& g) {
  // f and g monic.
  Monomial lcm = f.leading_monomial().lcm(g.leading_monomial());
  Poly a = f.times_monomial(1, lcm.divided_by(f.leading_monomial()));
  Poly b = g.times_monomial(1, lcm.divided_by(g.leading_monomial()));
  return a - b;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

// Inter-reduce: drop elements with dominated leading monomials, then
// reduce every tail against the rest until stable.
std::vector<Poly> reduce_basis(const Ring& ring, std::vector<Poly> basis) {
  auto lm_less = [&](const Poly& a, const Poly& b) {
    return monomial_cmp(a.leading_monomial(), b.leading_monomial(),
                        ring.order()) < 0;
  };
  std::sort(basis.begin(), basis.end(), lm_less);
  std::vector<Poly> minimal;
  for (const auto& g : basis) {
    bool dominated = false;
    for (const auto& k : minimal)
      if (k.leading_monomial().divides(g.leading_monomial())) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(g.monic());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Poly> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t k = 0; k < minimal.size(); ++k)
        if (k != i) others.push_back(minimal[k]);
      Poly nf = normal_form(minimal[i], others);
      if (nf != minimal[i]) {
        changed = true;
        if (nf.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
          --i;
        } else {
          minimal[i] = nf.monic();
        }
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), lm_less);
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(const Ring& ring, const std::vector<Poly>& gens) {
  std::vector<Poly> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return GroebnerBasis{{Poly::constant(ring, 1)}};
    basis.push_back(g.monic());
  }
  if (basis.empty()) return GroebnerBasis{};

  // Normal selection strategy: smallest lcm first (degree, then order,
  // then indices). `treated` feeds the chain criterion.
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree())
      return a.lcm.degree() < b.lcm.degree();
    int c = monomial_cmp(a.lcm, b.lcm, ring.order());
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> treated;
  auto push_pairs_for = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
      pending.push_back(
          {i, n,
           basis[i].leading_monomial().lcm(basis[n].leading_monomial())});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  while (!pending.empty()) {
    checkpoint();
    auto it = std::min_element(pending.begin(), pending.end(), pair_less);
    Pair pr = *it;
    pending.erase(it);
    treated.insert({pr.i, pr.j});

    const Poly& fi = basis[pr.i];
    const Poly& fj = basis[pr.j];
    if (fi.leading_monomial().coprime(fj.leading_monomial())) continue;
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (treated.count(key(pr.i, k)) && treated.count(key(pr.j, k)))
        chained = true;
    }
    if (chained) continue;

    Poly h = normal_form(s_polynomial(fi, fj), basis);
    if (h.is_zero()) continue;
    if (h.is_constant()) return GroebnerBasis{{Poly::constant(ring, 1)}};
    basis.push_back(h.monic());
    push_pairs_for(basis.size() - 1);
  }

  return GroebnerBasis{reduce_basis(ring, std::move(basis))};
}

}  // namespace groebner
