#pragma once

// JSON text for solutions and polynomials. Rationals that are integers
// fitting in 64 bits are written as numbers, all others as "p/q" strings;
// both spellings are accepted on input.

#include <string>
#include <string_view>

#include "diag/fibrations.hpp"

namespace diag {

std::string rational_to_json(const Rational& r);
std::string poly_to_json(const Poly& f);
Poly poly_from_json(std::string_view text);

/// {"equation":{"a":..,"b":..,"exponents":[p,q,r,s]},"x":[..],"y":[..],
///  "z":[..],"w":[..],"generator":"..","m":..} on one line.
std::string solution_to_json(const ParametricSolution& sol);
/// Throws InvalidInput on malformed JSON or a bad field.
ParametricSolution solution_from_json(std::string_view text);

}  // namespace diag
