#pragma once

// Polynomial solution families of a(x^p - y^q) = b(z^r - w^s) obtained from
// elliptic fibrations over Q(t).

#include <array>
#include <string>
#include <vector>

#include "diag/normalize.hpp"

namespace diag {

struct DiagonalEquation {
  Rational a;
  Rational b;
  std::array<int, 4> exponents{};  // (p, q, r, s)

  /// Accepts the exponent patterns with solution families here together with
  /// (2, 6n, 6, 6) for n >= 1 and (4, 4, 4, 4). Throws InvalidInput otherwise.
  DiagonalEquation(Rational a_, Rational b_, std::array<int, 4> e);
  std::string name() const;  // e.g. "2666"
  /// Weights w_i with w_i * exponent_i = lcm of the exponents.
  std::array<int, 4> weights() const;
};

struct ParametricSolution {
  DiagonalEquation equation;
  Poly x, y, z, w;
  std::string generator;
  long m = 0;

  std::array<Poly, 4> coords() const { return {x, y, z, w}; }
};

/// a(x^p - y^q) - b(z^r - w^s), expanded.
Poly identity_residual(const ParametricSolution& sol);
bool verify_identity(const ParametricSolution& sol);
/// x^p = y^q and z^r = w^s, or a cross pairing (x^p = +-z^r, y^q = +-w^s or
/// the swapped one) that cancels both sides identically.
bool is_trivial(const ParametricSolution& sol);

struct GcdReport {
  Poly gcd;         // monic gcd of the coordinates
  Integer content;  // gcd of all integer coefficients
  /// Largest c with c^{w_i} | content of coordinate i; only this part can be
  /// scaled away without leaving the equation.
  Integer weighted_content;
  bool coprime() const { return gcd.degree() == 0 && weighted_content == 1; }
};
GcdReport solution_gcd(const ParametricSolution& sol);
std::array<int, 4> degrees(const ParametricSolution& sol);

/// Removes lambda in Q(t)^* with lambda^{w_i} dividing coordinate i, using
/// the exponent weights, then clears rational content the same way.
ParametricSolution reduce_coprime(const ParametricSolution& sol);

/// (2,6,6,6): multiples of the tangent point on 2at^3y^3 = -(at^6-b)z^3 + (at^6+b)w^3
/// with origin (t,-1,1); m = 1 is the tangent point itself.
ParametricSolution gen_2666(const Rational& a, const Rational& b, long m);
/// (2,4,8,8) and (2,8,4,8): multiples of Q = (-t,1,1) on the quartic with origin (t,1,1).
/// m = 1 gives a trivial solution; m = 2 is the first nontrivial one.
ParametricSolution gen_2488(const Rational& a, const Rational& b, long m);
ParametricSolution gen_2848(const Rational& a, const Rational& b, long m);
/// (2,4,6,12): n-fold duplication from (z,w,y) = (1,1,t^3).
ParametricSolution gen_24612(const Rational& a, const Rational& b, long n);
/// (2,6,4,12) and (2,12,4,6): pullback of mQ, m >= 2; coprimality is not claimed.
ParametricSolution gen_26412(const Rational& a, const Rational& b, long m);
ParametricSolution gen_21246(const Rational& a, const Rational& b, long m);
/// t = (2b)^{n-1} T^n in the tangent-point solution of (2,6,6,6); solves
/// a(x^2 - y^{6n}) = b(z^6 - w^6). Common factors are left in place.
ParametricSolution cor2_solution(const Rational& a, long n, const Rational& b = Rational(1));

/// One duplication step of the (2,4,6,12) recurrence: raw values from the
/// printed formulas and the weighted-reduced values.
struct DuplicationStep {
  Poly z_raw, w_raw, y_raw;
  Poly z, w, y;
  RatFunc lambda;  // (z, w, y) = (lambda^2 z_raw, lambda w_raw, lambda^3 y_raw)
};
std::vector<DuplicationStep> recurrence_24612(const Rational& a, const Rational& b, long n);

/// Generator by family name ("2666", "2488", "2848", "24612", "26412",
/// "21246", "cor2"); cor2 reads m as n. Throws InvalidInput for others.
ParametricSolution generate(const std::string& family, const Rational& a, const Rational& b, long m);
const std::vector<std::string>& family_names();

}  // namespace diag
