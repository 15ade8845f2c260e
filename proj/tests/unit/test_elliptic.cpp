#include <gtest/gtest.h>

#include "diag/elliptic.hpp"
#include "diag/torsion.hpp"

using namespace diag;

using QPoint = CurvePoint<Rational>;

TEST(Weierstrass, AddExamples) {
  WeierstrassCurve<Rational> e(0, 1);
  auto p = QPoint::affine(0, 1);
  EXPECT_EQ(ec_add(e, p, QPoint::infinity()), p);
  EXPECT_EQ(ec_add(e, p, p), QPoint::affine(0, -1));
  EXPECT_TRUE(ec_add(e, p, QPoint::affine(0, -1)).infinite);
  EXPECT_THROW(ec_add(e, p, QPoint::affine(1, 1)), InvalidInput);
  EXPECT_THROW(WeierstrassCurve<Rational>(0, 0), Degenerate);
}

TEST(Weierstrass, Multiply) {
  WeierstrassCurve<Rational> e(0, 1);
  auto p = QPoint::affine(0, 1);
  EXPECT_TRUE(ec_multiply(e, p, 0).infinite);
  EXPECT_TRUE(ec_multiply(e, p, 3).infinite);
  EXPECT_THROW(ec_multiply(e, p, -1), InvalidInput);

  WeierstrassCurve<Rational> f(0, -2);
  auto q = QPoint::affine(3, 5);
  QPoint acc = QPoint::infinity();
  for (int m = 0; m <= 7; ++m) {
    EXPECT_EQ(ec_multiply(f, q, m), acc);
    acc = ec_add(f, acc, q);
  }
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      EXPECT_EQ(ec_multiply(f, q, m + n), ec_add(f, ec_multiply(f, q, m), ec_multiply(f, q, n)));
    }
  }
}

TEST(Weierstrass, GroupLaws) {
  WeierstrassCurve<Rational> f(0, -2);
  auto q = QPoint::affine(3, 5);
  std::vector<QPoint> pts;
  for (int m = 1; m <= 5; ++m) pts.push_back(ec_multiply(f, q, m));
  for (const auto& a : pts) {
    EXPECT_TRUE(ec_add(f, a, ec_negate(a)).infinite);
    for (const auto& b : pts) {
      EXPECT_EQ(ec_add(f, a, b), ec_add(f, b, a));
      for (const auto& c : pts) EXPECT_EQ(ec_add(f, ec_add(f, a, b), c), ec_add(f, a, ec_add(f, b, c)));
    }
  }
}

TEST(Weierstrass, GroupLawsOverQt) {
  Poly t = Poly::t();
  // (t, t^2 + 1) lies on y^2 = x^3 + B.
  Poly B = (t * t + Poly(1)).pow(2) - t.pow(3);
  WeierstrassCurve<RatFunc> e(RatFunc(0), RatFunc(B));
  auto p = CurvePoint<RatFunc>::affine(RatFunc(t), RatFunc(t * t + Poly(1)));
  ASSERT_TRUE(e.contains(p));
  auto p2 = ec_multiply(e, p, 2), p3 = ec_multiply(e, p, 3);
  EXPECT_TRUE(e.contains(p2));
  EXPECT_EQ(ec_add(e, p2, p), p3);
  EXPECT_EQ(ec_add(e, ec_add(e, p, p2), p3), ec_add(e, p, ec_add(e, p2, p3)));
}

TEST(Division, Polynomials) {
  WeierstrassCurve<Rational> e(0, 5);
  auto psi3 = division_polynomial(e, 3);
  EXPECT_EQ(psi3, (XPoly<Rational>{0, 60, 0, 0, 3}));
  WeierstrassCurve<Rational> one(0, 1);
  EXPECT_EQ(eval_xpoly(division_polynomial(one, 3), Rational(0)), 0);
  WeierstrassCurve<Rational> ax(7, 0);
  EXPECT_EQ(division_polynomial(ax, 2), (XPoly<Rational>{0, 7, 0, 1}));
  // (2,4) has order 4 on y^2 = x^3 + 4x.
  WeierstrassCurve<Rational> four(4, 0);
  EXPECT_TRUE(ec_multiply(four, QPoint::affine(2, 4), 4).infinite);
  EXPECT_EQ(eval_xpoly(division_polynomial(four, 4), Rational(2)), 0);
  EXPECT_THROW(division_polynomial(e, 5), InvalidInput);
}

TEST(Torsion, OverQ) {
  WeierstrassCurve<Rational> one(0, 1);
  EXPECT_EQ(is_torsion_over_Q(one, QPoint::affine(0, 1)), 3);
  EXPECT_EQ(is_torsion_over_Q(one, QPoint::affine(2, 3)), 6);
  EXPECT_EQ(is_torsion_over_Q(one, QPoint::infinity()), 1);
  WeierstrassCurve<Rational> f(0, -2);
  EXPECT_FALSE(is_torsion_over_Q(f, QPoint::affine(3, 5)));
}

TEST(Torsion, PointROfInfiniteOrder) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {-5, 7}}) {
    auto e = curve_2666(a, b);
    auto r = point_R(a, b);
    ASSERT_TRUE(e.contains(r));
    for (int n : {2, 3, 4}) EXPECT_FALSE(is_zero(eval_xpoly(division_polynomial(e, n), r.x))) << n;
    EXPECT_TRUE(e.contains(ec_multiply(e, r, 2)));
  }
}

TEST(Torsion, Specializations) {
  auto r = torsion_specializations_2666(1, 1);
  EXPECT_TRUE(r.order2.empty());
  EXPECT_LE(r.total(), 26U);
  EXPECT_TRUE(r.order6_excluded);
  EXPECT_TRUE(torsion_specializations_2666(3, 1).order2.empty());
  EXPECT_THROW(torsion_specializations_2666(0, 1), InvalidInput);
  // Each reported value makes R torsion on its fibre.
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {3, 1}, {1, 3}, {1, 27}, {1, -3}}) {
    auto rep = torsion_specializations_2666(a, b);
    auto check = [&](const std::vector<Rational>& ts, int order) {
      for (const auto& t0 : ts) {
        Rational at6 = a * power(t0, 6);
        WeierstrassCurve<Rational> e(0, -27 * a * a * power(at6 - b, 2) * power(at6 + b, 2));
        Rational x = (3 * a * a * power(t0, 12) + b * b) / power(t0, 4);
        Rational y = b * (b * b - 9 * a * a * power(t0, 12)) / power(t0, 6);
        EXPECT_EQ(is_torsion_over_Q(e, QPoint::affine(x, y)), order);
      }
    };
    check(rep.order2, 2);
    check(rep.order3, 3);
    check(rep.order4, 4);
  }
}

TEST(Quartic, CurveDoubling) {
  // 2at^2y^2 = (at^4 - b)z^4 + (at^4 + b)w^4 in (z/w, y/w^2).
  Rational a = 2, b = 3;
  Poly t = Poly::t();
  RatFunc alpha(a * t.pow(4) - Poly(b), Rational(2) * a * t * t);
  RatFunc beta(a * t.pow(4) + Poly(b), Rational(2) * a * t * t);
  QuarticCurve<RatFunc> c(alpha, beta, RatFunc(t));
  QuarticGroup<RatFunc> g(c, {RatFunc(1), RatFunc(t)});
  QuarticPoint<RatFunc> q{RatFunc(1), RatFunc(-t)};
  auto two = g.multiply(q, 2);
  Poly z = Poly(b * b) - Rational(2) * a * b * t.pow(4) - Rational(2) * a * a * t.pow(8);
  Poly w = Poly(b * b) + Rational(2) * a * b * t.pow(4) - Rational(2) * a * a * t.pow(8);
  Poly y = t * (Poly(-3 * power(b, 4)) + Rational(4) * power(a, 4) * t.pow(16));
  EXPECT_EQ(two.x, RatFunc(z, w));
  EXPECT_TRUE(two.y == RatFunc(y, w * w) || two.y == -RatFunc(y, w * w));
  EXPECT_TRUE(c.contains(two.x, two.y));
  auto o = g.multiply(q, 0);
  EXPECT_EQ(o.x, RatFunc(1));
  EXPECT_EQ(o.y, RatFunc(t));
}

TEST(Quartic, TransportRoundTripAndOrderTwo) {
  // y^2 = 2x^4 + 7, origin (1, 3).
  QuarticCurve<Rational> c(2, 7, 3);
  QuarticGroup<Rational> g(c, {1, 3});
  QuarticPoint<Rational> o{1, 3};
  EXPECT_EQ(g.add(o, {-1, 3}), (QuarticPoint<Rational>{-1, 3}));
  std::vector<QuarticPoint<Rational>> pts = {{-1, 3}, {1, -3}, {-1, -3}};
  for (int k = 2; k <= 3; ++k) pts.push_back(g.multiply({-1, 3}, k));
  for (const auto& p : pts) {
    EXPECT_TRUE(c.contains(p.x, p.y));
    EXPECT_EQ(g.from_cubic(g.to_cubic(p)), p);
  }
}

TEST(Quartic, BranchPointsDifferByTwoTorsion) {
  // y^2 = 15x^4 - 15/16 has branch points (+-1/2, 0) and origin (1, 15/4).
  QuarticCurve<Rational> c(15, Rational(-15, 16), Rational(15, 4));
  QuarticGroup<Rational> g(c, {1, Rational(15, 4)});
  const auto& e = g.cubic();
  auto p = g.to_cubic({Rational(1, 2), 0});
  auto q = g.to_cubic({Rational(-1, 2), 0});
  auto d = ec_add(e, p, ec_negate(q));
  ASSERT_FALSE(d.infinite);
  EXPECT_TRUE(ec_multiply(e, d, 2).infinite);
  EXPECT_THROW(g.to_cubic({0, 1}), InvalidInput);
}
