#pragma once

// Closed forms of the displayed solutions, specialized at numeric (a, b).
// These are the regression targets for the generators.

#include <optional>

#include "diag/fibrations.hpp"

namespace diag {

ParametricSolution known_2666(const Rational& a, const Rational& b);
/// The solutions coming from 2Q.
ParametricSolution known_2488(const Rational& a, const Rational& b);
ParametricSolution known_2848(const Rational& a, const Rational& b);
ParametricSolution known_24612(const Rational& a, const Rational& b);
ParametricSolution known_26412(const Rational& a, const Rational& b);
ParametricSolution known_21246(const Rational& a, const Rational& b);
/// b = 1 substitution t = 2^{n-1} T^n.
ParametricSolution known_cor2(const Rational& a, long n);

/// Coordinatewise equality up to sign (the equations only see even powers).
bool equal_up_to_sign(const ParametricSolution& s, const ParametricSolution& t);
/// lambda > 0 with s_i = +-lambda^{w_i} t_i for every coordinate, if one exists.
std::optional<Rational> weighted_equivalence(const ParametricSolution& s, const ParametricSolution& t);

}  // namespace diag
