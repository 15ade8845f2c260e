#pragma once

#include <vector>

#include "diag/elliptic.hpp"

namespace diag {

/// E: Y^2 = X^3 - 27a^2(at^6 - b)^2(at^6 + b)^2 over Q(t).
WeierstrassCurve<RatFunc> curve_2666(const Rational& a, const Rational& b);
/// R = ((3a^2t^12 + b^2)/t^4, b(b^2 - 9a^2t^12)/t^6), the image of the
/// tangent point of the (2,6,6,6) cubic.
CurvePoint<RatFunc> point_R(const Rational& a, const Rational& b);

struct TorsionReport {
  Rational a, b;
  /// Numerators in t whose rational roots give orders 2, 3 and 4.
  Poly order2_poly, order3_poly, order4_poly;
  std::vector<Rational> order2, order3, order4;
  /// -D/27 is a square in Q[t], so D(t0) <= 0 is never a nonzero sixth power.
  bool order6_excluded = false;
  /// Values where the fibre is singular (at^6 = +-b); never counted.
  std::vector<Rational> singular;

  std::size_t total() const { return order2.size() + order3.size() + order4.size(); }
};

/// Rational t0 != 0 at which R specializes to a torsion point of order
/// 2, 3 or 4 on the (nonsingular) fibre. Throws InvalidInput if a or b is 0.
TorsionReport torsion_specializations_2666(const Rational& a, const Rational& b);

}  // namespace diag
