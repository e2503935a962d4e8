#include "polyalg/poly.hpp"

#include <algorithm>
#include <sstream>

namespace polyalg {

Poly Poly::constant(const Ring& r, std::int64_t c) {
  Poly p(r);
  std::uint32_t cc = r.field().reduce(c);
  if (cc != 0) p.terms_.push_back({Monomial(r.var_count()), cc});
  return p;
}

Poly Poly::variable(const Ring& r, std::size_t i) {
  if (i >= r.var_count()) throw std::out_of_range("variable index");
  std::vector<std::uint16_t> e(r.var_count(), 0);
  e[i] = 1;
  Poly p(r);
  p.terms_.push_back({Monomial(std::move(e)), 1});
  return p;
}

Poly Poly::monomial(const Ring& r, Monomial m, std::int64_t c) {
  Poly p(r);
  std::uint32_t cc = r.field().reduce(c);
  if (cc != 0) p.terms_.push_back({std::move(m), cc});
  return p;
}

Poly Poly::from_terms(const Ring& r, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return monomial_cmp(a.mono, b.mono, r.order()) > 0;
  });
  Poly p(r);
  for (auto& t : terms) {
    std::uint32_t c = t.coeff % r.field().modulus();
    if (c == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      std::uint32_t s = r.field().add(p.terms_.back().coeff, c);
      if (s == 0)
        p.terms_.pop_back();
      else
        p.terms_.back().coeff = s;
    } else {
      p.terms_.push_back({std::move(t.mono), c});
    }
  }
  return p;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no terms");
  return terms_.front().mono;
}

std::uint32_t Poly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no terms");
  return terms_.front().coeff;
}

std::int32_t Poly::total_degree() const {
  std::int32_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  ring_.require_compatible(o.ring_);
  const auto& F = ring_.field();
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = monomial_cmp(terms_[i].mono, o.terms_[j].mono, ring_.order());
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      std::uint32_t s = F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s != 0) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back({t.mono, ring_.field().neg(t.coeff)});
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::times_monomial(std::uint32_t c, const Monomial& m) const {
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::uint32_t cc = ring_.field().mul(t.coeff, c);
    if (cc != 0) r.terms_.push_back({t.mono.times(m), cc});
  }
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  ring_.require_compatible(o.ring_);
  Poly acc(ring_);
  // Multiply by the shorter operand term-wise.
  const Poly& a = terms_.size() <= o.terms_.size() ? *this : o;
  const Poly& b = terms_.size() <= o.terms_.size() ? o : *this;
  for (const auto& t : a.terms_) acc = acc + b.times_monomial(t.coeff, t.mono);
  return acc;
}

Poly Poly::scaled(std::uint32_t c) const {
  Poly r(ring_);
  c %= ring_.field().modulus();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back({t.mono, ring_.field().mul(t.coeff, c)});
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_.field().inv(terms_.front().coeff));
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(ring_, 1);
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

Poly Poly::sub_scaled(std::uint32_t c, const Monomial& m, const Poly& g) const {
  const auto& F = ring_.field();
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    Monomial gm = g.terms_[j].mono.times(m);
    int cmp = monomial_cmp(terms_[i].mono, gm, ring_.order());
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      std::uint32_t cc = F.neg(F.mul(g.terms_[j].coeff, c));
      if (cc != 0) r.terms_.push_back({std::move(gm), cc});
      ++j;
    } else {
      std::uint32_t cc = F.sub(terms_[i].coeff, F.mul(g.terms_[j].coeff, c));
      if (cc != 0) r.terms_.push_back({terms_[i].mono, cc});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) {
    std::uint32_t cc = F.neg(F.mul(g.terms_[j].coeff, c));
    if (cc != 0) r.terms_.push_back({g.terms_[j].mono.times(m), cc});
  }
  return r;
}

Poly Poly::derivative(std::size_t j) const {
  if (j >= ring_.var_count()) throw std::out_of_range("variable index");
  const auto& F = ring_.field();
  Poly r(ring_);
  for (const auto& t : terms_) {
    std::uint16_t e = t.mono.exponent(j);
    if (e == 0) continue;
    std::uint32_t c = F.mul(t.coeff, F.reduce(e));
    if (c == 0) continue;
    std::vector<std::uint16_t> exps(ring_.var_count());
    for (std::size_t k = 0; k < ring_.var_count(); ++k)
      exps[k] = t.mono.exponent(k);
    exps[j] -= 1;
    r.terms_.push_back({Monomial(std::move(exps)), c});
  }
  // Term order is preserved by lowering one exponent uniformly only under
  // degrevlex ties; re-sort to stay canonical.
  return from_terms(ring_, std::move(r.terms_));
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::int32_t d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

Poly Poly::lifted(const Ring& bigger) const {
  if (bigger.var_count() < ring_.var_count())
    throw std::invalid_argument("target ring has fewer variables");
  for (std::size_t i = 0; i < ring_.var_count(); ++i)
    if (bigger.var_name(i) != ring_.var_name(i))
      throw std::invalid_argument("target ring is not an extension");
  std::size_t extra = bigger.var_count() - ring_.var_count();
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back({t.mono.extended(extra), t.coeff});
  return from_terms(bigger, std::move(ts));
}

Poly Poly::dehomogenized(const Ring& smaller, std::size_t i) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_)
    ts.push_back({t.mono.without_variable(i), t.coeff});
  return from_terms(smaller, std::move(ts));
}

Poly Poly::reordered(const Ring& target) const {
  if (target.var_count() != ring_.var_count() ||
      !(target.field() == ring_.field()))
    throw std::invalid_argument("reorder requires identical variables");
  std::vector<Term> ts = terms_;
  return from_terms(target, std::move(ts));
}

bool Poly::operator==(const Poly& o) const {
  if (!ring_.compatible_with(o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff ||
        terms_[i].mono != o.terms_[i].mono)
      return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << " + ";
    first = false;
    bool printed = false;
    if (t.coeff != 1 || t.mono.is_one()) {
      out << t.coeff;
      printed = true;
    }
    for (std::size_t i = 0; i < ring_.var_count(); ++i) {
      std::uint16_t e = t.mono.exponent(i);
      if (e == 0) continue;
      if (printed) out << "*";
      out << ring_.var_name(i);
      if (e > 1) out << "^" << e;
      printed = true;
    }
  }
  return out.str();
}

bool divides_exactly(const Poly& f, const Poly& g) {
  if (f.is_zero()) return false;
  if (g.is_zero()) return true;
  // Single-divisor multivariate division: g must reduce to zero using
  // leading-term steps against f alone.
  Poly rem = g;
  const Ring& R = f.ring();
  const auto& F = R.field();
  std::uint32_t lc_inv = F.inv(f.leading_coeff());
  while (!rem.is_zero()) {
    if (!f.leading_monomial().divides(rem.leading_monomial())) return false;
    Monomial m = rem.leading_monomial().divided_by(f.leading_monomial());
    std::uint32_t c = F.mul(rem.leading_coeff(), lc_inv);
    rem = rem.sub_scaled(c, m, f);
  }
  return true;
}

}  // namespace polyalg
