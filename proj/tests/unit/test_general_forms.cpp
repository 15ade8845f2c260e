#include <gtest/gtest.h>

#include "diag/general_forms.hpp"

using namespace diag;

namespace {

std::vector<Rational> vec(std::initializer_list<Rational> l) { return l; }

}  // namespace

TEST(Form, ParseEval) {
  Form f = parse_form("# x^2 y - 3 z^3\n1 : 2 1 0\n-3 : 0 0 3\n");
  EXPECT_EQ(f.variables(), 3u);
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f(vec({2, 5, 1})), 17);
  Form g = parse_form(to_string(f));
  EXPECT_EQ(g(vec({Rational(1, 2), 3, -1})), f(vec({Rational(1, 2), 3, -1})));
  EXPECT_THROW(parse_form("1 : 2 0\n1 : 1 0\n"), InvalidInput);
  EXPECT_THROW(parse_form("1 : 2 0\n1 : 1 0 1\n"), InvalidInput);
  EXPECT_THROW(parse_form(""), InvalidInput);
}

TEST(Form, Product) {
  Form l = Form::linear(vec({1, -1}));
  Form q = Form::monomial(2, {1, 1});
  FormProduct p({{l, 1}, {q, 2}});
  EXPECT_EQ(p.degree(), 5);
  EXPECT_EQ(p(vec({3, 1})), 2 * 36);
}

TEST(Eab, PointQ) {
  for (int a : {1, 2, -3, 5}) {
    for (int b : {1, -2, 7}) {
      for (const Rational& s : {Rational(1, 2), Rational(3), Rational(-2, 5)}) {
        if (Rational(a) + b * power(s, 4) == 0) continue;
        auto e = curve_e_ab(a, b, s);
        EXPECT_EQ(e.B, 0);
        EXPECT_EQ(e.A, 4 * a * b * power(Rational(a) - b * power(s, 4), 2));
        auto q = point_q(a, b, s);
        EXPECT_TRUE(e.contains(q));
        auto c = quartic_c_ab(a, b, s);
        EXPECT_EQ(c.cubic().A, e.A);
        EXPECT_EQ(c.cubic().B, e.B);
      }
    }
  }
  EXPECT_THROW(point_q(1, 1, 0), Degenerate);
  EXPECT_THROW(point_q(1, -1, 1), Degenerate);
}

TEST(Thm6, CubicForms) {
  // f1 = X1^3, f2 = -X1 X2^2 and u = (1, s): -f2(u)/f1(u) = s^2.
  Form f1 = Form::monomial(1, {3, 0});
  Form f2 = Form::monomial(-1, {1, 2});
  int made = 0;
  for (int a : {1, 3}) {
    for (int b : {2, -5}) {
      for (const Rational& s : {Rational(2), Rational(1, 3)}) {
        Thm6Context ctx{a, b, f1, f2, vec({1, s}), s};
        for (long k = 1; k <= 3; ++k) {
          try {
            auto p = thm6_point(ctx, k);
            EXPECT_TRUE(on_v(ctx, p));
            EXPECT_EQ(p.k, k);
            ++made;
          } catch (const Degenerate&) {
          }
        }
      }
    }
  }
  EXPECT_GE(made, 12);
  Thm6Context bad{1, 2, f1, f2, vec({1, 2}), Rational(3)};
  EXPECT_THROW(thm6_point(bad, 1), InvalidInput);
  Thm6Context even{1, 2, Form::monomial(1, {2, 0}), Form::monomial(-1, {0, 2}), vec({1, 2}), Rational(2)};
  EXPECT_THROW(thm6_point(even, 1), InvalidInput);
}

TEST(Thm6, QuadraticFactors) {
  Form F1 = Form::linear(vec({1, 2, 0}));
  Form F2 = Form::linear(vec({0, 1, -1}));
  auto l1 = vec({1, 0, 1}), l2 = vec({0, 1, 1});
  int made = 0;
  for (const Rational& U1 : {Rational(1), Rational(2)}) {
    for (const Rational& U2 : {Rational(1), Rational(-3)}) {
      auto free = vec({U1, U2, 5});
      try {
        auto r = cor62_parametrize(2, 3, l1, l2, F1, F2, free, 1);
        Rational L1 = l1[0] * r.u[0] + l1[1] * r.u[1] + l1[2] * r.u[2];
        Rational L2 = l2[0] * r.u[0] + l2[1] * r.u[1] + l2[2] * r.u[2];
        EXPECT_EQ(L1, U1 * U1);
        EXPECT_EQ(L2, -U2 * U2);
        Thm6Context ctx{2, 3, FormProduct({{Form::linear(l1), 1}, {F1, 2}}),
                        FormProduct({{Form::linear(l2), 1}, {F2, 2}}), r.u, r.s};
        EXPECT_TRUE(on_v(ctx, r.point));
        ++made;
      } catch (const Degenerate&) {
      }
    }
  }
  EXPECT_GE(made, 2);
  EXPECT_THROW(cor62_parametrize(2, 3, vec({1, 1}), vec({2, 2}), Form::linear(vec({1, 0})),
                                 Form::linear(vec({0, 1})), vec({1, 1}), 1),
               InvalidInput);
}

TEST(Unirational, Residual) {
  int made = 0;
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      if (a == 0 || b == 0) continue;
      for (const Rational& u : {Rational(1), Rational(2, 3), Rational(-5)}) {
        for (const Rational& v : {Rational(0), Rational(1, 2), Rational(4)}) {
          try {
            auto p = unirational_map(a, b, u, v);
            EXPECT_EQ(del_pezzo_residual(a, b, p), 0);
            ++made;
          } catch (const Degenerate&) {
          }
        }
      }
    }
  }
  EXPECT_GT(made, 300);
  // b u^2 (u^2 - 2 v^2) + a = 0 at a = 1, b = 1, u = 1, v = 1.
  EXPECT_THROW(unirational_map(1, 1, 1, 1), Degenerate);
}

TEST(Unirational, Lift) {
  Form f1 = Form::linear(vec({1, 1}));
  Form f2 = parse_form("1 : 2 1\n1 : 3 0\n");
  auto pqr = unirational_map(2, 3, Rational(1, 2), Rational(2));
  for (const Rational& w : {Rational(1), Rational(3, 2), Rational(-4)}) {
    auto lift = thm63_lift(2, 3, f1, f2, vec({w}), pqr);
    Rational h1 = f1(lift.X), h2 = f2(lift.X);
    EXPECT_EQ(2 * (power(lift.y1, 4) - power(h1, 4)), 3 * (power(lift.y2, 4) - h2 * h2));
  }
  EXPECT_THROW(thm63_lift(2, 3, f1, f1, vec({1}), pqr), InvalidInput);
  EXPECT_THROW(thm63_lift(2, 3, f1, f2, vec({-1}), pqr), Degenerate);
}
