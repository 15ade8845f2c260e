#include <gtest/gtest.h>

#include "diag/known_forms.hpp"

using namespace diag;

namespace {

Poly tp(int k) { return Poly::monomial(1, k); }

bool same(const ParametricSolution& s, const Poly& x, const Poly& y, const Poly& z, const Poly& w) {
  return s.x == x && s.y == y && s.z == z && s.w == w;
}

const std::vector<std::pair<Rational, Rational>> kSamples = {
    {1, 1}, {2, 3}, {5, -7}, {-3, 4}, {Rational(1, 2), 3}, {7, 2}, {-1, -1}, {4, 9}, {3, Rational(-2, 5)}, {6, 1}};

}  // namespace

TEST(Gen2666, PrintedSolution) {
  auto s = gen_2666(1, 1, 1);
  Poly x = Rational(2) * tp(3) * (Rational(27) * tp(12) + Poly(5));
  EXPECT_TRUE(same(s, x, Rational(2) * tp(1), Rational(3) * tp(6) + Poly(1), Rational(3) * tp(6) - Poly(1)));
  EXPECT_EQ(s.x.eval(1), 64);
  EXPECT_EQ(s.y.eval(1), 2);
  EXPECT_EQ(s.z.eval(1), 4);
  EXPECT_EQ(s.w.eval(1), 2);
  EXPECT_EQ(power(Rational(64), 2) - power(Rational(2), 6), 4032);
  EXPECT_TRUE(verify_identity(s));
  EXPECT_FALSE(is_trivial(s));
}

TEST(Gen2666, HigherMultiples) {
  auto s1 = gen_2666(1, 1, 1);
  auto s2 = gen_2666(1, 1, 2);
  EXPECT_TRUE(verify_identity(s2));
  EXPECT_FALSE(is_trivial(s2));
  EXPECT_EQ(solution_gcd(s2).gcd, Poly(1));
  auto d1 = degrees(s1), d2 = degrees(s2);
  for (int i = 0; i < 4; ++i) EXPECT_GT(d2[i], d1[i]);
  EXPECT_THROW(gen_2666(0, 1, 1), InvalidInput);
  EXPECT_THROW(gen_2666(1, 1, 0), InvalidInput);
}

TEST(Generators, IdentityCoprimeAndGrowth) {
  for (const auto& [a, b] : kSamples) {
    for (const char* fam : {"2666", "2488", "2848", "24612"}) {
      std::array<int, 4> prev{};
      for (long m = 1; m <= 4; ++m) {
        auto s = generate(fam, a, b, m);
        ASSERT_TRUE(verify_identity(s)) << fam << " m=" << m;
        bool first_trivial = (std::string(fam) == "2488" || std::string(fam) == "2848") && m == 1;
        EXPECT_EQ(is_trivial(s), first_trivial) << fam << " m=" << m;
        auto g = solution_gcd(s);
        EXPECT_EQ(g.gcd.degree(), 0);
        EXPECT_EQ(g.weighted_content, 1);
        EXPECT_TRUE(s.x.has_integer_coeffs() && s.y.has_integer_coeffs() && s.z.has_integer_coeffs() &&
                    s.w.has_integer_coeffs());
        auto d = degrees(s);
        if (m > 1) EXPECT_GT(d[0], prev[0]) << fam << " m=" << m;
        prev = d;
      }
    }
  }
}

TEST(Gen2488, PrintedDisplays) {
  for (const auto& [a, b] : kSamples) {
    EXPECT_TRUE(equal_up_to_sign(gen_2488(a, b, 2), known_2488(a, b)) || weighted_equivalence(known_2488(a, b), gen_2488(a, b, 2)));
    EXPECT_TRUE(equal_up_to_sign(gen_2848(a, b, 2), known_2848(a, b)) || weighted_equivalence(known_2848(a, b), gen_2848(a, b, 2)));
  }
  auto s = gen_2848(1, 1, 2);
  Poly y = tp(1) * (Poly(-3) + Rational(6) * tp(8) + Rational(13) * tp(16));
  EXPECT_TRUE(s.y == y || s.y == -y);
}

TEST(Gen2488, ConstantTerms) {
  for (long m = 1; m <= 4; ++m) {
    auto s = gen_2488(1, 1, m);
    EXPECT_EQ(s.z.coeff(0), 1);
    EXPECT_EQ(s.w.coeff(0), 1);
    EXPECT_EQ(s.y.coeff(0), 0);
    auto u = gen_2848(1, 1, m);
    EXPECT_EQ(u.z.coeff(0), 1);
    EXPECT_EQ(u.w.coeff(0), 1);
  }
  // b odd and coprime to a: the printed exponents b^{m^2-m} for (2,4,8,8); z of (2,8,4,8) has weight 2.
  for (long m = 1; m <= 4; ++m) {
    Rational e = power(Rational(3), static_cast<unsigned long>(m * m - m));
    auto s = gen_2488(2, 3, m);
    EXPECT_EQ(s.z.coeff(0), e);
    EXPECT_EQ(s.w.coeff(0), e);
    auto u = gen_2848(2, 3, m);
    EXPECT_EQ(u.w.coeff(0), e);
    EXPECT_EQ(u.z.coeff(0), e * e);
  }
}

TEST(Gen24612, PrintedAndValuations) {
  Rational a = 1, b = 1;
  auto s = gen_24612(a, b, 1);
  Poly y = Rational(2) * (Poly(-27) - Rational(18) * tp(12) + Rational(13) * tp(24));
  EXPECT_TRUE(s.y == y || s.y == -y);
  EXPECT_EQ(poly_gcd(s.y, tp(1) * (tp(12) - Poly(1))), Poly(1));
  Poly z = Rational(-2) * tp(2) * (Poly(9) + Rational(7) * tp(12));
  EXPECT_TRUE(s.z == z || s.z == -z);
  EXPECT_TRUE(s.w == Rational(4) * tp(7) || s.w == Rational(-4) * tp(7));
  for (const auto& [a2, b2] : kSamples) {
    for (long n = 1; n <= 3; ++n) {
      auto u = gen_24612(a2, b2, n);
      EXPECT_EQ(u.z.t_valuation(), 2);
      EXPECT_EQ(u.w.t_valuation(), 7);
      EXPECT_EQ(u.y.t_valuation(), 0);
      EXPECT_EQ(poly_gcd(u.y, a2 * tp(12) - Poly(b2)), Poly(1));
    }
  }
}

TEST(Gen24612, RecurrenceCongruence) {
  for (const auto& [a, b] : kSamples) {
    Poly f = a * tp(12) - Poly(b);
    Poly prev = tp(3);
    for (const auto& step : recurrence_24612(a, b, 3)) {
      auto r = divmod(step.y_raw - Rational(64) * a * a * b * prev.pow(4), f).second;
      EXPECT_TRUE(r.is_zero());
      prev = step.y;
    }
  }
}

TEST(Gen26412, Displays) {
  for (const auto& [a, b] : kSamples) {
    auto s = gen_26412(a, b, 2);
    auto k = known_26412(a, b);
    EXPECT_TRUE(verify_identity(s));
    EXPECT_TRUE(weighted_equivalence(k, s).has_value());
    auto u = gen_21246(a, b, 2);
    EXPECT_TRUE(verify_identity(u));
    EXPECT_TRUE(weighted_equivalence(known_21246(a, b), u).has_value());
  }
  auto s = gen_26412(1, 1, 2);
  Rational t0 = 2;
  Rational lhs = power(s.x.eval(t0), 2) - power(s.y.eval(t0), 6);
  Rational rhs = power(s.z.eval(t0), 4) - power(s.w.eval(t0), 12);
  EXPECT_EQ(lhs, rhs);
  Poly w = Rational(2) * (tp(12) - Poly(1));
  EXPECT_TRUE(s.w == w || s.w == -w);
  auto u = gen_21246(1, 1, 2);
  Poly w2 = (tp(12) - Poly(1)) * (Rational(17) * tp(12) + Poly(1));
  EXPECT_TRUE(u.w == w2 || u.w == -w2);
  for (long m = 2; m <= 4; ++m) {
    EXPECT_TRUE(verify_identity(gen_26412(2, 3, m)));
    EXPECT_TRUE(verify_identity(gen_21246(2, 3, m)));
  }
  EXPECT_THROW(gen_26412(1, 1, 1), InvalidInput);
}

TEST(Cor2, PrintedValues) {
  auto c1 = cor2_solution(1, 1);
  auto g = gen_2666(1, 1, 1);
  EXPECT_TRUE(equal_up_to_sign(c1, g));
  auto c2 = cor2_solution(1, 2);
  Poly T = tp(1);
  Poly x = Rational(16) * tp(6) * (Rational(27 * 4096) * tp(24) + Poly(5));
  ParametricSolution printed{c2.equation, x, Rational(2) * T, Rational(192) * tp(12) + Poly(1),
                             Rational(192) * tp(12) - Poly(1), "cor2", 2};
  EXPECT_TRUE(equal_up_to_sign(c2, printed));
  for (long n = 1; n <= 4; ++n) {
    auto c = cor2_solution(5, n);
    EXPECT_TRUE(verify_identity(c));
    EXPECT_EQ(poly_gcd(c.z, c.w), Poly(1));
    EXPECT_EQ(igcd(c.z.integer_content(), c.w.integer_content()), 1);
  }
}

TEST(Identity, VerifyAndTrivial) {
  auto s = gen_2666(1, 1, 1);
  auto bad = s;
  bad.x += Poly(1);
  EXPECT_FALSE(verify_identity(bad));
  EXPECT_FALSE(identity_residual(bad).is_zero());
  ParametricSolution triv{DiagonalEquation(1, 1, {2, 6, 6, 6}), tp(3), tp(1), Poly(1), Poly(1), "", 0};
  EXPECT_TRUE(verify_identity(triv));
  EXPECT_TRUE(is_trivial(triv));
  ParametricSolution zero{DiagonalEquation(1, 1, {2, 6, 6, 6}), Poly(), Poly(), Poly(), Poly(), "", 0};
  EXPECT_TRUE(is_trivial(zero));
  EXPECT_FALSE(is_trivial(s));
  EXPECT_THROW(DiagonalEquation(1, 1, {2, 6, 6, 5}), InvalidInput);
  EXPECT_THROW(DiagonalEquation(0, 1, {2, 6, 6, 6}), InvalidInput);
  EXPECT_NO_THROW(DiagonalEquation(1, 4, {4, 4, 4, 4}));
  EXPECT_NO_THROW(DiagonalEquation(1, 1, {2, 18, 6, 6}));
}

TEST(Reduce, WeightedPowersOfT) {
  auto s = gen_24612(1, 1, 1);
  auto big = s;
  big.z = s.z * tp(8);
  big.w = s.w * tp(4);
  big.y = s.y * tp(12);
  big.x = s.x * tp(24);
  ASSERT_TRUE(verify_identity(big));
  auto r = reduce_coprime(big);
  EXPECT_TRUE(equal_up_to_sign(r, s));
  EXPECT_TRUE(equal_up_to_sign(reduce_coprime(s), s));
  auto scaled = s;
  scaled.x *= Rational(64);
  scaled.y *= Rational(8);
  scaled.z *= Rational(4);
  scaled.w *= Rational(2);
  EXPECT_TRUE(equal_up_to_sign(reduce_coprime(scaled), s));
}

TEST(Generate, Dispatch) {
  EXPECT_EQ(family_names().size(), 7U);
  EXPECT_THROW(generate("4444", 1, 1, 1), InvalidInput);
  EXPECT_THROW(generate("nope", 1, 1, 1), InvalidInput);
  auto s = generate("cor2", 1, 1, 2);
  EXPECT_EQ(s.equation.exponents[1], 12);
}
