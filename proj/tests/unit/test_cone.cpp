#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "diag/cone.hpp"

using namespace diag;

namespace {

// Determinant by cofactor expansion; fine for d <= 5.
Integer det(const std::vector<IntVector>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Integer sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<IntVector> minor;
    for (std::size_t i = 1; i < n; ++i) {
      IntVector row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    Integer c = m[0][j] * det(minor);
    sum += (j % 2 ? -c : c);
  }
  return sum;
}

// Generalized cross product of d - 1 rows in dimension d.
IntVector cross(const std::vector<IntVector>& rows, std::size_t d) {
  IntVector out(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<IntVector> m;
    for (const auto& r : rows) {
      IntVector row;
      for (std::size_t k = 0; k < d; ++k) {
        if (k != j) row.push_back(r[k]);
      }
      m.push_back(row);
    }
    Integer c = det(m);
    out[j] = (j % 2 ? -c : c);
  }
  return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

// Rays through every (d-1)-subset of rows; a ray is extremal when the rows
// it saturates have rank d - 1, which holds for any cross product that is
// nonzero and feasible.
std::vector<IntVector> oracle(const RationalCone& cone) {
  const std::size_t d = cone.dimension(), n = cone.halfspaces.size();
  std::vector<IntVector> rays;
  std::vector<int> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d - 1), 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) rows.push_back(cone.halfspaces[i]);
    }
    IntVector v = cross(rows, d);
    if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; })) continue;
    for (int sign : {1, -1}) {
      IntVector u = v;
      for (auto& x : u) x *= sign;
      bool ok = std::all_of(cone.halfspaces.begin(), cone.halfspaces.end(),
                            [&](const IntVector& c) { return dot(c, u) >= 0; });
      if (ok) rays.push_back(primitive(u));
    }
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

}  // namespace

TEST(Cone, Orthant) {
  auto cone = parse_cone("1 0\n0 1\n");
  auto rays = extremal_rays(cone);
  EXPECT_EQ(rays, (std::vector<IntVector>{{0, 1}, {1, 0}}));
}

TEST(Cone, SquarePyramid) {
  auto cone = parse_cone("# x, z, y - z bounded by y\n1 0 0\n0 0 1\n0 1 -1\n-1 1 0\n");
  auto rays = extremal_rays(cone);
  std::vector<IntVector> want = {{0, 1, 0}, {0, 1, 1}, {1, 1, 0}, {1, 1, 1}};
  EXPECT_EQ(rays, want);
  EXPECT_EQ(rays, oracle(cone));
}

TEST(Cone, RandomAgainstOracle) {
  std::mt19937 rng(4412);
  std::uniform_int_distribution<int> coef(-3, 3);
  int compared = 0, nonempty = 0;
  while (compared < 40) {
    std::size_t d = 3 + rng() % 2;
    RationalCone cone;
    for (std::size_t i = 0; i < d; ++i) {
      IntVector e(d, 0);
      e[i] = 1;
      cone.halfspaces.push_back(e);
    }
    for (int k = 0; k < 3; ++k) {
      IntVector c(d);
      for (auto& x : c) x = coef(rng);
      if (std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; })) continue;
      cone.halfspaces.push_back(c);
    }
    auto got = extremal_rays(cone);
    auto want = oracle(cone);
    EXPECT_EQ(got, want);
    nonempty += !want.empty();
    ++compared;
  }
  EXPECT_GT(nonempty, 10);
}

TEST(Cone, Errors) {
  EXPECT_THROW(extremal_rays(parse_cone("1 0\n")), Degenerate);
  EXPECT_THROW(extremal_rays(parse_cone("1 0 0\n0 1\n")), InvalidInput);
  EXPECT_THROW(extremal_rays(parse_cone("")), InvalidInput);
  EXPECT_THROW(extremal_rays(parse_cone("0 0\n1 0\n0 1\n")), InvalidInput);
  EXPECT_THROW(parse_cone("1 x\n"), InvalidInput);
}

TEST(Cone, PointedNotFull) {
  // The ray (1, 1) alone: x - y = 0 and x >= 0.
  auto rays = extremal_rays(parse_cone("1 -1\n-1 1\n1 0\n"));
  EXPECT_EQ(rays, (std::vector<IntVector>{{1, 1}}));
}
