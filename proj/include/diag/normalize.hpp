#pragma once

#include <span>
#include <vector>

#include "diag/ratfunc.hpp"

namespace diag {

struct ScaledList {
  std::vector<Poly> polys;
  /// input[i] = scale * polys[i]
  Rational scale;
};

/// Clears denominators and the common integer content of a list of
/// polynomials. The first nonzero entry ends up with a positive leading
/// coefficient, so the result is invariant under rescaling the input.
/// Throws InvalidInput when every entry is zero.
ScaledList integer_normalize(std::span<const Poly> fs);

struct WeightedReduction {
  std::vector<Poly> polys;
  /// Monic polynomial f removed as f^{w_i} from entry i (after clearing
  /// polynomial denominators).
  Poly removed_factor;
  /// out[i] = lambda^{w_i} * in[i] with lambda = den_lcm / (removed_factor * content).
  RatFunc lambda;
};

/// Weighted reduction in Q(t): finds lambda in Q(t)^* making every
/// lambda^{w_i} * v_i a polynomial with integer coefficients and no
/// nonconstant polynomial f or integer c > 1 with f^{w_i} | v_i (resp.
/// c^{w_i} | content) for all i. Zero entries impose no condition.
WeightedReduction weighted_reduce(std::span<const RatFunc> vs, std::span<const int> weights);

/// Largest positive integer c with c^{w_i} dividing the content of every
/// nonzero integer polynomial f_i.
Integer weighted_content(std::span<const Poly> fs, std::span<const int> weights);

}  // namespace diag
