#pragma once

// Height-bounded integer searches: w^2 = z^6 - x^6 - y^6, the surfaces
// ax^2 + by^6 = cz^6 + dw^6, and the Selmer cubic; 3-adic obstructions.

#include <array>
#include <cstdint>
#include <vector>

namespace diag {

/// Worker threads for searches: DIAG_THREADS when set to a positive
/// integer, otherwise the hardware concurrency.
unsigned search_threads();

struct SexticHit {
  std::int64_t x, y, z, w;
  friend auto operator<=>(const SexticHit&, const SexticHit&) = default;
};
/// 0 < x <= y < z with x + y + z < max_sum and z^6 - x^6 - y^6 = w^2, w >= 0.
std::vector<SexticHit> sextic_search(std::int64_t max_sum, unsigned threads = 0);

using Coeffs4 = std::array<std::int64_t, 4>;

struct Mod3Result {
  bool obstructed;  // no weighted-primitive solution over the 3-adic integers
  /// When solvable: 3-adic valuations of (x, y, z, w) at a solution, -1 for
  /// a zero coordinate.
  std::array<int, 4> witness;
};
Mod3Result mod3_analysis(const Coeffs4& abcd);
bool mod3_obstruction(const Coeffs4& abcd);

struct SurfaceHit {
  std::int64_t x, y, z, w;  // all nonnegative
  friend auto operator<=>(const SurfaceHit&, const SurfaceHit&) = default;
};
/// a x^2 + b y^6 = c z^6 + d w^6 with 0 < y, z, w <= height, x > 0, and no
/// g > 1 with g | y, z, w and g^3 | x. Solutions with a zero coordinate are
/// treated as trivial and skipped. Sorted.
std::vector<SurfaceHit> surface_search(const Coeffs4& abcd, std::int64_t height, unsigned threads = 0);

struct CubicHit {
  std::int64_t x, y, z;
  friend auto operator<=>(const CubicHit&, const CubicHit&) = default;
};
/// Primitive nonzero (z, y, w) with |.| <= height and 3z^3 + 4y^3 + 5w^3 = rhs,
/// reported as (z, y, w). rhs = 0 is the Selmer cubic; rhs != 0 drops the
/// primitivity requirement.
std::vector<CubicHit> selmer_check(std::int64_t height, std::int64_t rhs = 0);

}  // namespace diag
