#pragma once

// ax^2 + by^{2p} = cz^{2q} + dw^{2r} with abcd a square: quadric splitting,
// the pencil A(t)y^p + B(t)z^q + C(t)w^r = 0 and searches on its members.

#include <array>
#include <optional>
#include <vector>

#include "diag/elliptic.hpp"

namespace diag {

using LinearForm = std::array<Integer, 4>;  // coefficients of X, Y, Z, W
using Quad = std::array<Rational, 4>;

struct QuadSplit {
  Quad coeffs;                // (a, b, c, d) for aX^2 + bY^2 - cZ^2 - dW^2
  std::array<LinearForm, 4> L;
  Rational mu;                // L1 L2 - L3 L4 = mu (aX^2 + bY^2 - cZ^2 - dW^2)
};

bool check_split(const QuadSplit& s);
/// The split of X^2 + Y^2 - 2Z^2 - 2W^2 with mu = 6 used for x^2 + y^6 = 2(z^6 + w^6).
QuadSplit example_split();
/// 2X^2 + Y^2 - 2Z^2 - 4W^2 = (X + Z)(2X - 2Z) - (2W + Y)(2W - Y).
QuadSplit remark_split();

/// Splits through the tangent plane at a rational point P0. Without P0, a
/// point of height <= 10 is searched for; InvalidInput if none is found.
QuadSplit richmond_split(const Quad& abcd, std::optional<Quad> p0 = std::nullopt);

struct PencilCurve {
  QuadSplit split;
  std::array<int, 3> exponents;  // (p, q, r) acting on (y, z, w)
  std::array<Poly, 3> abc;       // A, B, C
  /// The two linear equations e_X x + e_Y Y + e_Z Z + e_W W = 0 in t.
  std::array<std::array<Poly, 4>, 2> eqs;

  std::array<Rational, 3> at(const Rational& t0) const;
};

/// Intersection L3 = t L1, t L4 = L2; x is eliminated between the two.
PencilCurve build_pencil(const QuadSplit& split, std::array<int, 3> exponents);
struct XRecovery {
  Poly num_y, num_z, num_w, den;  // x = (num_y Y + num_z Z + num_w W) / den from the first equation
};
XRecovery x_recovery(const PencilCurve& c);
/// x for a point (y, z, w) on C_{t0}; Degenerate when both equations lose x.
Rational recover_x(const PencilCurve& c, const Rational& t0, const std::array<Integer, 3>& yzw);
/// a x^2 + b y^{2p} - c z^{2q} - d w^{2r}.
Rational surface_residual(const PencilCurve& c, const Rational& x, const std::array<Integer, 3>& yzw);

/// (2,3,6) members: Y^2 = X^3 - A^3 B^2 C with X = -ABz/w^2, Y = A^2 B y/w^3.
struct Weierstrass236 {
  Poly A, B, C;
  WeierstrassCurve<RatFunc> curve;
  CurvePoint<Rational> map(const Rational& t0, const std::array<Rational, 3>& yzw) const;
  WeierstrassCurve<Rational> at(const Rational& t0) const;
};
Weierstrass236 weierstrass_236(const PencilCurve& c);

struct CubicSearch {
  std::vector<std::array<Integer, 3>> points;
  bool degenerate = false;  // some coefficient vanishes at t0
  long height = 0;
};
/// Primitive (y, z, w) with max |coordinate| <= H on C_{t0}, ordered by
/// height then lexicographically. When p, q, r are all odd, (y, z, w) and
/// its negative are the same point and only the one with positive leading
/// nonzero entry is kept.
CubicSearch cubic_point_search(const PencilCurve& c, const Rational& t0, long H);

/// Order (<= 12) of the class of P * P on alpha y^3 + beta z^3 + gamma w^3 = 0
/// with P as origin, or nullopt when no multiple up to 12 returns to P.
std::optional<int> plane_cubic_order(const std::array<Rational, 3>& coeffs, const std::array<Rational, 3>& p);

}  // namespace diag
