#include "diag/torsion.hpp"

#include <algorithm>

namespace diag {

std::optional<int> is_torsion_over_Q(const WeierstrassCurve<Rational>& e, const CurvePoint<Rational>& p) {
  if (!e.contains(p)) throw InvalidInput("point not on the curve");
  CurvePoint<Rational> acc = p;
  for (int n = 1; n <= 12; ++n) {
    if (acc.infinite) return n;
    acc = detail::add_unchecked(e, acc, p);
  }
  return std::nullopt;
}

namespace {

Poly t_pow(int k) { return Poly::monomial(1, k); }

void check_ab(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw InvalidInput("a and b must be nonzero");
}

}  // namespace

WeierstrassCurve<RatFunc> curve_2666(const Rational& a, const Rational& b) {
  check_ab(a, b);
  Poly minus = a * t_pow(6) - Poly(b);
  Poly plus = a * t_pow(6) + Poly(b);
  Poly d = Rational(-27) * a * a * minus * minus * plus * plus;
  return WeierstrassCurve<RatFunc>(RatFunc(0), RatFunc(d));
}

CurvePoint<RatFunc> point_R(const Rational& a, const Rational& b) {
  check_ab(a, b);
  Poly x = Rational(3) * a * a * t_pow(12) + Poly(b * b);
  Poly y = b * (Poly(b * b) - Rational(9) * a * a * t_pow(12));
  return CurvePoint<RatFunc>::affine(RatFunc(x, t_pow(4)), RatFunc(y, t_pow(6)));
}

TorsionReport torsion_specializations_2666(const Rational& a, const Rational& b) {
  check_ab(a, b);
  auto e = curve_2666(a, b);
  auto r = point_R(a, b);
  TorsionReport rep;
  rep.a = a;
  rep.b = b;
  rep.order2_poly = r.y.num();
  rep.order3_poly = eval_xpoly(division_polynomial(e, 3), r.x).num();
  rep.order4_poly = eval_xpoly(division_polynomial(e, 4), r.x).num();

  Poly minus = a * t_pow(6) - Poly(b);
  Poly plus = a * t_pow(6) + Poly(b);
  for (const auto& f : {minus, plus}) {
    for (const auto& t0 : rational_roots(f)) rep.singular.push_back(t0);
  }
  std::sort(rep.singular.begin(), rep.singular.end());

  auto admissible = [&](const Poly& f) {
    std::vector<Rational> out;
    for (const auto& t0 : rational_roots(f)) {
      if (t0 == 0) continue;
      if (std::binary_search(rep.singular.begin(), rep.singular.end(), t0)) continue;
      out.push_back(t0);
    }
    return out;
  };
  rep.order2 = admissible(rep.order2_poly);
  rep.order3 = admissible(rep.order3_poly);
  rep.order4 = admissible(rep.order4_poly);

  Poly minus_d_over_27 = a * a * minus * minus * plus * plus;
  rep.order6_excluded = is_perfect_power(minus_d_over_27, 2);
  return rep;
}

}  // namespace diag
