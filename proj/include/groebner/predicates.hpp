#pragma once

#include "groebner/ideal.hpp"

namespace groebner {

/// f in I, decided by normal form against the cached basis.
bool ideal_membership(const Poly& f, const Ideal& I);

/// f in sqrt(I), decided by the Rabinowitsch trick: test whether
/// 1 lies in I + <t*f - 1> in the ring extended by a fresh last variable.
bool radical_membership(const Poly& f, const Ideal& I);

/// Krull dimension of R/I via independent variable sets modulo the
/// leading-term ideal. Returns -1 for the unit ideal and the full
/// variable count for the zero ideal.
int ideal_dimension(const Ideal& I);

/// Saturation I : q^infinity, computed by eliminating the Rabinowitsch
/// variable from I + <t*q - 1> with a block order.
Ideal saturate(const Ideal& I, const Poly& q);

/// Intersection of two ideals (tag-variable elimination). Exposed mainly
/// for corpus construction and tests.
Ideal intersect(const Ideal& I, const Ideal& J);

}  // namespace groebner
