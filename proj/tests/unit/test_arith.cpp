#include <gtest/gtest.h>

#include <random>

#include "diag/normalize.hpp"

using namespace diag;

namespace {

Poly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(-9, 9), den(1, 4);
  std::vector<Rational> v(deg(rng) + 1);
  for (auto& x : v) {
    x = Rational(c(rng), den(rng));
    x.canonicalize();
  }
  return Poly(v);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-0/5")), "0");
  EXPECT_EQ(to_string(parse_rational(" +7 ")), "7");
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("1.5"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
  auto v = parse_rational_list("1,1,2,-2");
  ASSERT_EQ(v.size(), 4U);
  EXPECT_EQ(v[3], -2);
}

TEST(Rational, RootsAndFactors) {
  EXPECT_EQ(*exact_root(Rational(-27, 8), 3), Rational(-3, 2));
  EXPECT_FALSE(exact_root(Rational(-4), 2));
  EXPECT_FALSE(exact_root(Rational(2), 2));
  EXPECT_EQ(isqrt(Integer(99)), 9);
  auto f = factor_integer(Integer(-360));
  ASSERT_EQ(f.size(), 3U);
  EXPECT_EQ(f[0], (std::pair<Integer, unsigned>{2, 3}));
  EXPECT_EQ(f[2], (std::pair<Integer, unsigned>{5, 1}));
  Integer big = Integer("1000000007") * Integer("998244353");
  auto g = factor_integer(big);
  ASSERT_EQ(g.size(), 2U);
  EXPECT_EQ(g[0].first * g[1].first, big);
  EXPECT_EQ(valuation(Integer(162), Integer(3)), 4U);
}

TEST(Poly, GcdExamples) {
  Poly t = Poly::t();
  Poly f = t * t - Poly(1);
  EXPECT_EQ(poly_gcd(f, Poly()), f.monic());
  EXPECT_EQ(poly_gcd(f, t - Poly(1)), t - Poly(1));
  EXPECT_EQ(poly_gcd(t * t + Poly(1), t), Poly(1));
  EXPECT_TRUE(poly_gcd(Poly(), Poly()).is_zero());
  EXPECT_EQ(poly_gcd(Rational(3) * f, Rational(5) * (t + Poly(1)) * (t + Poly(1))), t + Poly(1));
}

TEST(Poly, GcdProperty) {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    Poly c = random_poly(rng, 3);
    if (c.is_zero()) continue;
    Poly f = c * random_poly(rng, 4), g = c * random_poly(rng, 4);
    Poly d = poly_gcd(f, g);
    if (f.is_zero() && g.is_zero()) continue;
    EXPECT_TRUE(divides(d, f));
    EXPECT_TRUE(divides(d, g));
    EXPECT_TRUE(divides(c.monic(), d));
    EXPECT_EQ(d.leading(), 1);
  }
}

TEST(Poly, EvalAndRingLaws) {
  Poly t = Poly::t();
  EXPECT_EQ(t.pow(3).eval(2), 8);
  EXPECT_EQ((Rational(3) * t.pow(6) + Poly(1)).eval(1), 4);
  EXPECT_EQ(Poly().eval(5), 0);
  std::mt19937 rng(3);
  for (int i = 0; i < 40; ++i) {
    Poly f = random_poly(rng, 5), g = random_poly(rng, 5), h = random_poly(rng, 5);
    Rational t0(static_cast<int>(rng() % 11) - 5, 3);
    t0.canonicalize();
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ((f * g).eval(t0), f.eval(t0) * g.eval(t0));
    EXPECT_EQ(f.compose(g).eval(t0), f.eval(g.eval(t0)));
  }
}

TEST(Poly, DivisionAndRoots) {
  Poly t = Poly::t();
  Poly f = (t - Poly(2)) * (Rational(3) * t + Poly(1)) * (t * t + Poly(1));
  auto [q, r] = divmod(f, t * t + Poly(1));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q, (t - Poly(2)) * (Rational(3) * t + Poly(1)));
  EXPECT_THROW(divmod(f, Poly()), InvalidInput);
  auto roots = rational_roots(f);
  ASSERT_EQ(roots.size(), 2U);
  EXPECT_EQ(roots[0], Rational(-1, 3));
  EXPECT_EQ(roots[1], 2);
  EXPECT_TRUE(is_perfect_power(Rational(4) * f * f, 2));
  EXPECT_FALSE(is_perfect_power(Rational(2) * f * f, 2));
  EXPECT_EQ(squarefree_part(f * f * (t - Poly(2))), f.monic());
}

TEST(Poly, TextRoundTrip) {
  Poly f = Rational(3) * Poly::t().pow(6) + Poly(1);
  EXPECT_EQ(to_string(f), "[1,0,0,0,0,0,3]");
  EXPECT_EQ(parse_poly("[1,0,0,0,0,0,3]"), f);
  EXPECT_EQ(parse_poly("[1/2, -3]"), Poly(std::vector<Rational>{Rational(1, 2), Rational(-3)}));
  EXPECT_TRUE(parse_poly("[]").is_zero());
  EXPECT_EQ(parse_poly("[0,0]"), Poly());
  EXPECT_THROW(parse_poly("1,2"), InvalidInput);
}

TEST(Normalize, Examples) {
  Poly t = Poly::t();
  std::vector<Poly> a = {Rational(1, 2) * t, Poly(Rational(1, 2))};
  auto ra = integer_normalize(a);
  EXPECT_EQ(ra.polys[0], t);
  EXPECT_EQ(ra.polys[1], Poly(1));
  EXPECT_EQ(ra.scale, Rational(1, 2));
  std::vector<Poly> b = {Rational(2) * t, Poly(4)};
  auto rb = integer_normalize(b);
  EXPECT_EQ(rb.polys[1], Poly(2));
  EXPECT_EQ(rb.scale, 2);
  std::vector<Poly> c = {Rational(3) * t * t, Rational(6) * t, Poly(9)};
  EXPECT_EQ(integer_normalize(c).scale, 3);
  std::vector<Poly> zero = {Poly(), Poly()};
  EXPECT_THROW(integer_normalize(zero), InvalidInput);
}

TEST(Normalize, ScalingInvariance) {
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    std::vector<Poly> v = {random_poly(rng, 4), random_poly(rng, 4), random_poly(rng, 4)};
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
    Rational s(static_cast<int>(rng() % 17) - 8, static_cast<int>(rng() % 5) + 1);
    if (s == 0) continue;
    s.canonicalize();
    std::vector<Poly> w;
    for (const auto& f : v) w.push_back(f * s);
    auto a = integer_normalize(v), b = integer_normalize(w);
    EXPECT_EQ(a.polys, b.polys);
    EXPECT_EQ(b.scale, a.scale * s);
  }
}

TEST(Normalize, WeightedReduction) {
  Poly t = Poly::t();
  // (z, w, y) = (t^8 u, t^4 v, t^12 s) with weights (2, 1, 3) loses t^4.
  std::vector<RatFunc> v = {RatFunc(t.pow(8) * (t + Poly(1))), RatFunc(t.pow(4) * Rational(2)), RatFunc(t.pow(12))};
  std::vector<int> w = {2, 1, 3};
  auto r = weighted_reduce(v, w);
  EXPECT_EQ(r.polys[0], t + Poly(1));
  EXPECT_EQ(r.polys[1], Poly(2));
  EXPECT_EQ(r.polys[2], Poly(1));
  std::vector<Poly> ints = {Poly(8), Poly(4), Poly(16)};
  std::vector<int> w2 = {3, 2, 2};
  EXPECT_EQ(weighted_content(ints, w2), 2);
}

TEST(RatFunc, Canonical) {
  Poly t = Poly::t();
  RatFunc f(Rational(2) * (t * t - Poly(1)), Rational(4) * (t - Poly(1)));
  EXPECT_EQ(f.den(), Poly(1));
  EXPECT_EQ(f.num(), Rational(1, 2) * (t + Poly(1)));
  RatFunc g(Poly(1), Rational(-3) * t);
  EXPECT_EQ(g.den(), t);
  EXPECT_EQ(g.num(), Poly(Rational(-1, 3)));
  EXPECT_THROW(RatFunc(Poly(1), Poly()), Degenerate);
  EXPECT_THROW(g.eval(0), Degenerate);
  EXPECT_EQ(g * RatFunc(t) + RatFunc(Rational(1, 3)), RatFunc());
}
