#pragma once

// Integer-coefficient polynomial kernels used behind Poly: multiplication
// (schoolbook or Kronecker substitution) and the modular gcd.

#include <vector>

#include "diag/poly.hpp"

namespace diag::detail {

using IntVec = std::vector<Integer>;

/// Rescales f by the lcm of its denominators: f = out / den.
IntVec to_integer(const Poly& f, Integer& den);
Poly from_integer(const IntVec& v, const Integer& den = 1);

void trim(IntVec& v);
IntVec mul(const IntVec& f, const IntVec& g);
Integer content(const IntVec& v);
/// Divides out the content and makes the leading coefficient positive.
IntVec primitive(const IntVec& v);

/// Primitive gcd with positive leading coefficient of two nonzero integer
/// polynomials.
IntVec gcd(const IntVec& f, const IntVec& g);

}  // namespace diag::detail
