#pragma once

#include <vector>

#include "kwise/numeric.hpp"
#include "kwise/polynomial.hpp"

namespace kwise {

/// Distinct real roots of p in [lo, hi], isolated by Sturm sequences and
/// refined by bisection to intervals narrower than `width`. Each root is
/// returned as the midpoint of its final interval. p must be nonzero.
std::vector<Rational> real_roots(const RationalPoly& p, const Rational& lo, const Rational& hi,
                                 const Rational& width = Rational(1, BigInt("1000000000000000000000000000000")));

/// max |p(x)| over [lo, hi]: endpoints plus the critical points of p.
Real sup_abs(const RationalPoly& p, const Rational& lo, const Rational& hi);

}  // namespace kwise
