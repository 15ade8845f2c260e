#include <gtest/gtest.h>

#include <cstdlib>

#include "diag/rational.hpp"
#include "diag/search.hpp"

using namespace diag;

namespace {

std::vector<SexticHit> sextic_oracle(long max_sum) {
  std::vector<SexticHit> out;
  for (long z = 1; z < max_sum; ++z) {
    for (long x = 1; x < z; ++x) {
      for (long y = x; y < z && x + y + z < max_sum; ++y) {
        Integer r = power(Integer(z), 6) - power(Integer(x), 6) - power(Integer(y), 6);
        if (r < 0) continue;
        Integer s = sqrt(r);
        if (s * s == r) out.push_back({x, y, z, s.get_si()});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long mod(long v, long m) { return ((v % m) + m) % m; }

// Weighted-primitive solutions modulo 27: not all of y, z, w divisible by 3,
// or x not divisible by 27.
bool solvable_mod27(const Coeffs4& c) {
  const long m = 27;
  std::array<long, 27> sq{}, p6{};
  for (long v = 0; v < m; ++v) {
    sq[v] = v * v % m;
    p6[v] = sq[v] * sq[v] % m * sq[v] % m;
  }
  for (long y = 0; y < m; ++y)
    for (long z = 0; z < m; ++z)
      for (long w = 0; w < m; ++w) {
        long rhs = mod(c[2] * p6[z] + c[3] * p6[w] - c[1] * p6[y], m);
        bool unit = y % 3 || z % 3 || w % 3;
        for (long x = 0; x < m; ++x) {
          if (!unit && x == 0) continue;
          if (mod(c[0] * sq[x], m) == rhs) return true;
        }
      }
  return false;
}

}  // namespace

TEST(Sextic, Known) {
  auto hits = sextic_search(200, 1);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0], (SexticHit{28, 44, 57, 162967}));
  EXPECT_TRUE(sextic_search(20).empty());
  EXPECT_TRUE(sextic_search(2).empty());
}

TEST(Sextic, Oracle) { EXPECT_EQ(sextic_search(60, 2), sextic_oracle(60)); }

TEST(Sextic, ThreadIndependent) { EXPECT_EQ(sextic_search(130, 1), sextic_search(130, 3)); }

TEST(Mod3, Examples) {
  EXPECT_FALSE(mod3_obstruction({1, 1, 2, 2}));
  EXPECT_EQ(mod3_obstruction({3, 3, 3, 3}), mod3_obstruction({1, 1, 1, 1}));
  bool any = false;
  for (long a = 1; a <= 5; ++a)
    for (long b = 1; b <= 5; ++b)
      for (long c = 1; c <= 5; ++c)
        for (long d = 1; d <= 5; ++d) any = any || mod3_obstruction({a, b, c, d});
  EXPECT_TRUE(any);
}

TEST(Mod3, AgreesWithMod27) {
  // Coefficients prime to 3: solutions mod 27 lift by Hensel.
  int total = 0;
  for (long a : {1, 2, 4})
    for (long b : {1, 2, 4})
      for (long c : {1, 2, 4})
        for (long d : {1, 2, 4}) {
          bool obs = mod3_obstruction({a, b, c, d});
          EXPECT_EQ(obs, !solvable_mod27({a, b, c, d})) << a << b << c << d;
          ++total;
        }
  EXPECT_EQ(total, 81);
}

TEST(Surface, Search) {
  auto hits = surface_search({1, 1, 2, 2}, 100, 1);
  EXPECT_FALSE(hits.empty());
  for (const auto& h : hits) {
    Integer lhs = Integer(h.x) * h.x + power(Integer(h.y), 6);
    Integer rhs = 2 * (power(Integer(h.z), 6) + power(Integer(h.w), 6));
    EXPECT_EQ(lhs, rhs);
  }
  EXPECT_NE(std::find(hits.begin(), hits.end(), SurfaceHit{8261, 5, 18, 7}), hits.end());
  auto small = surface_search({1, 1, 2, 2}, 20, 2);
  for (const auto& h : small) EXPECT_NE(std::find(hits.begin(), hits.end(), h), hits.end());
  EXPECT_EQ(surface_search({1, 1, 2, 2}, 60, 1), surface_search({1, 1, 2, 2}, 60, 3));
}

TEST(Surface, ObstructedIsEmpty) {
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long c = 1; c <= 3; ++c)
        for (long d = 1; d <= 3; ++d) {
          if (mod3_obstruction({a, b, c, d})) EXPECT_TRUE(surface_search({a, b, c, d}, 30).empty());
        }
}

TEST(Selmer, Cubic) {
  EXPECT_TRUE(selmer_check(100).empty());
  EXPECT_TRUE(selmer_check(1).empty());
  auto control = selmer_check(5, 12);
  EXPECT_FALSE(control.empty());
  for (const auto& h : control) EXPECT_EQ(3 * h.x * h.x * h.x + 4 * h.y * h.y * h.y + 5 * h.z * h.z * h.z, 12);
}
