#include <gtest/gtest.h>

#include "diag/cone.hpp"
#include "diag/quartic_surface.hpp"

using namespace diag;

namespace {

DivisorClass basis(int i) {
  DivisorClass d{};
  d[i] = 1;
  return d;
}

}  // namespace

TEST(Lattice, Table1) {
  EXPECT_EQ(pairing(basis(0), basis(0)), -2);
  EXPECT_EQ(pairing(basis(4), basis(5)), 2);
  EXPECT_EQ(pairing(basis(2), DivisorClass{}), 0);
  const auto& m = table1();
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(m[i][i] % 2, 0);
    for (int j = 0; j < 6; ++j) EXPECT_EQ(m[i][j], m[j][i]);
  }
  EXPECT_NE(table1_determinant(), 0);
  DivisorClass d = {1, -2, 0, 3, 1, -1}, e = {0, 1, 1, 0, 2, 5};
  EXPECT_EQ(pairing(d, e), pairing(e, d));
}

TEST(Lattice, GenusDegree) {
  auto l = genus_and_degree(basis(0));
  EXPECT_EQ(l.genus, 0);
  EXPECT_EQ(l.degree, 1);
  auto c = genus_and_degree(basis(4));
  EXPECT_EQ(c.genus, 0);
  EXPECT_EQ(c.degree, 2);
  auto z = genus_and_degree(DivisorClass{});
  EXPECT_EQ(z.genus, 1);
  EXPECT_EQ(z.degree, 0);
  EXPECT_FALSE(z.half_integral);
}

TEST(Lattice, FiveSquares) {
  EXPECT_TRUE(sum_of_squares_identity());
  EXPECT_EQ(five_squares(basis(0)), 9);
  EXPECT_EQ(five_squares(DivisorClass{}), 0);
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      DivisorClass d = {a, b, a - b, 1, b, a};
      long deg = degree(d);
      EXPECT_EQ(five_squares(d), deg * deg - 4 * pairing(d, d));
    }
  }
}

TEST(H4, Parametrizations) {
  EXPECT_TRUE(verify_h4_parametrization(H4Curve::degree3));
  EXPECT_TRUE(verify_h4_parametrization(H4Curve::degree7));
  auto d3 = h4_parametrization(H4Curve::degree3);
  EXPECT_EQ(d3.h, 4);
  EXPECT_EQ(d3.x.eval(1), 7);
  EXPECT_EQ(d3.y.eval(1), 9);
  EXPECT_EQ(d3.z.eval(1), -4);
  EXPECT_EQ(d3.w.eval(1), 6);
  auto d7 = h4_parametrization(H4Curve::degree7);
  EXPECT_EQ(std::max({d7.x.degree(), d7.y.degree(), d7.z.degree(), d7.w.degree()}), 7);
  EXPECT_EQ(d7.x.eval(0), -64);
  EXPECT_EQ(d7.y.eval(0), -96);
  EXPECT_EQ(d7.z.eval(0), -56);
  EXPECT_EQ(d7.w.eval(0), -72);
  auto broken = d3;
  broken.w += Poly(1);
  EXPECT_FALSE(surface_residual(broken).is_zero());
}

TEST(H4, HyperplaneConic) {
  EXPECT_NE(verify_hyperplane_conic(), 0);
  EXPECT_TRUE(verify_hyperplane_conic_at(1));
  EXPECT_TRUE(verify_hyperplane_conic_at(Rational(-3, 7)));
}

TEST(MinForm, SimpleCones) {
  // Only Delta_1: n1 >= 0 and n_j = 0 for j > 1.
  RationalCone single;
  single.halfspaces.push_back({1, 0, 0, 0, 0, 0});
  for (int j = 1; j < 6; ++j) {
    IntVector up(6, 0), down(6, 0);
    up[j] = 1;
    down[j] = -1;
    single.halfspaces.push_back(up);
    single.halfspaces.push_back(down);
  }
  auto m = min_self_intersection(single);
  EXPECT_EQ(m.value, -2);
  EXPECT_EQ(m.ray, (IntVector{1, 0, 0, 0, 0, 0}));

  // Delta_1 + Delta_5 is isotropic.
  EXPECT_EQ(pairing({1, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 1, 0}), 0);
  RationalCone iso;
  iso.halfspaces.push_back({1, 0, 0, 0, 0, 0});
  iso.halfspaces.push_back({-1, 0, 0, 0, 1, 0});
  iso.halfspaces.push_back({1, 0, 0, 0, -1, 0});
  for (int j : {1, 2, 3, 5}) {
    IntVector up(6, 0), down(6, 0);
    up[j] = 1;
    down[j] = -1;
    iso.halfspaces.push_back(up);
    iso.halfspaces.push_back(down);
  }
  EXPECT_EQ(min_self_intersection(iso).value, 0);
  RationalCone small;
  small.halfspaces = {{1, 0}, {0, 1}};
  EXPECT_THROW(min_self_intersection(small), InvalidInput);
}
