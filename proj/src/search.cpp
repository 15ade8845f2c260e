#include "diag/search.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <thread>

#include "diag/rational.hpp"

namespace diag {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 isqrt128(u128 n) {
  if (n < 2) return n;
  // Newton from a power of two above the root; r^2 <= n < (r+1)^2 at exit.
  int bits = 0;
  for (u128 m = n; m; m >>= 1) ++bits;
  u128 r = u128{1} << ((bits + 1) / 2);
  while (true) {
    u128 next = (r + n / r) / 2;
    if (next >= r) break;
    r = next;
  }
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool maybe_square(u128 n) {
  static const auto table = [] {
    std::array<std::array<bool, 65>, 3> t{};
    const std::array<unsigned, 3> mods{64, 63, 65};
    for (int k = 0; k < 3; ++k) {
      for (unsigned i = 0; i < mods[k]; ++i) t[k][(i * i) % mods[k]] = true;
    }
    return t;
  }();
  return table[0][static_cast<unsigned>(n % 64)] && table[1][static_cast<unsigned>(n % 63)] &&
         table[2][static_cast<unsigned>(n % 65)];
}

std::optional<std::int64_t> exact_sqrt(i128 n) {
  if (n < 0) return std::nullopt;
  u128 u = static_cast<u128>(n);
  if (!maybe_square(u)) return std::nullopt;
  u128 r = isqrt128(u);
  if (r * r != u) return std::nullopt;
  return static_cast<std::int64_t>(r);
}

i128 pow6(std::int64_t v) {
  i128 s = static_cast<i128>(v) * v;
  return s * s * s;
}

template <class Hit, class Job>
std::vector<Hit> run_partitioned(std::int64_t lo, std::int64_t hi, unsigned threads, Job job) {
  if (threads == 0) threads = search_threads();
  threads = std::max(1u, threads);
  std::vector<std::vector<Hit>> parts(threads);
  auto worker = [&](unsigned id) {
    for (std::int64_t v = lo + id; v <= hi; v += threads) job(v, parts[id]);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
  }
  std::vector<Hit> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

unsigned search_threads() {
  if (const char* env = std::getenv("DIAG_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SexticHit> sextic_search(std::int64_t max_sum, unsigned threads) {
  if (max_sum < 3) return {};
  if (max_sum > 200000) throw InvalidInput("max_sum too large for 128-bit arithmetic");
  return run_partitioned<SexticHit>(2, max_sum - 3, threads, [max_sum](std::int64_t z, std::vector<SexticHit>& out) {
    const i128 z6 = pow6(z);
    for (std::int64_t y = 1; y < z && y + 1 + z < max_sum; ++y) {
      const i128 rest = z6 - pow6(y);
      for (std::int64_t x = 1; x <= y && x + y + z < max_sum; ++x) {
        if (auto w = exact_sqrt(rest - pow6(x))) out.push_back({x, y, z, *w});
      }
    }
  });
}

Mod3Result mod3_analysis(const Coeffs4& abcd) {
  for (auto v : abcd) {
    if (v == 0) throw InvalidInput("coefficients must be nonzero");
  }
  // Over Z_3, x^2 with v(x) = j fills 9^j + 3^{2j+1} Z_3 and y^6 with v(y) = j
  // fills 3^{6j} + 3^{6j+2} Z_3, so each nonzero term alpha_i * (power) is a
  // coset p_i + 3^{s_i} Z_3 and a sum of terms reaches 0 iff
  // sum p_i = 0 mod 3^{min s_i}.
  const std::array<Integer, 4> alpha{Integer(abcd[0]), Integer(abcd[1]), Integer(-abcd[2]), Integer(-abcd[3])};
  const std::array<int, 4> mult{2, 6, 6, 6};
  const std::array<int, 4> prec{1, 2, 2, 2};
  std::array<int, 4> va{};
  int vmax = 0;
  for (int i = 0; i < 4; ++i) {
    va[i] = static_cast<int>(valuation(alpha[i], 3));
    vmax = std::max(vmax, va[i]);
  }
  // Terms of valuation >= vmax + 6 never affect the congruence of a
  // primitive point, so larger valuations repeat smaller ones.
  const int cap = vmax + 6;
  std::array<int, 4> vlim{};
  for (int i = 0; i < 4; ++i) vlim[i] = cap / mult[i] + 1;

  Mod3Result out{true, {-1, -1, -1, -1}};
  std::array<int, 4> v{};
  for (int mask = 1; mask < 16; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) < 2) continue;
    auto rec = [&](auto&& self, int i) -> bool {
      if (i == 4) {
        bool prim = false;
        for (int j = 1; j < 4; ++j) prim = prim || ((mask >> j & 1) && v[j] == 0);
        prim = prim || ((mask & 1) && v[0] <= 2);
        if (!prim) return false;
        Integer sum = 0;
        int mod = 1 << 30;
        for (int j = 0; j < 4; ++j) {
          if (!(mask >> j & 1)) continue;
          sum += alpha[j] * power(Integer(3), static_cast<unsigned long>(mult[j] * v[j]));
          mod = std::min(mod, va[j] + mult[j] * v[j] + prec[j]);
        }
        return sum == 0 || static_cast<int>(valuation(sum, 3)) >= mod;
      }
      if (!(mask >> i & 1)) {
        v[i] = -1;
        return self(self, i + 1);
      }
      for (v[i] = 0; v[i] <= vlim[i]; ++v[i]) {
        if (self(self, i + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0)) {
      out.obstructed = false;
      out.witness = v;
      return out;
    }
  }
  return out;
}

bool mod3_obstruction(const Coeffs4& abcd) { return mod3_analysis(abcd).obstructed; }

std::vector<SurfaceHit> surface_search(const Coeffs4& k, std::int64_t height, unsigned threads) {
  for (auto v : k) {
    if (v == 0) throw InvalidInput("coefficients must be nonzero");
  }
  if (height < 1) throw InvalidInput("height must be >= 1");
  if (height > 5000) throw InvalidInput("height too large for 128-bit arithmetic");
  return run_partitioned<SurfaceHit>(1, height, threads, [&](std::int64_t y, std::vector<SurfaceHit>& out) {
    const i128 by = static_cast<i128>(k[1]) * pow6(y);
    for (std::int64_t z = 1; z <= height; ++z) {
      const i128 cz = static_cast<i128>(k[2]) * pow6(z);
      for (std::int64_t w = 1; w <= height; ++w) {
        i128 n = cz + static_cast<i128>(k[3]) * pow6(w) - by;
        if (n <= 0 || n % k[0] != 0) continue;
        auto x = exact_sqrt(n / k[0]);
        if (!x) continue;
        std::int64_t g = std::gcd(std::gcd(y, z), w);
        bool reducible = false;
        for (std::int64_t p = 2; p <= g && !reducible; ++p) {
          if (g % p == 0 && *x % (p * p * p) == 0) reducible = true;
        }
        if (!reducible) out.push_back({*x, y, z, w});
      }
    }
  });
}

std::vector<CubicHit> selmer_check(std::int64_t height, std::int64_t rhs) {
  if (height < 1) throw InvalidInput("height must be >= 1");
  std::vector<CubicHit> out;
  for (std::int64_t z = -height; z <= height; ++z) {
    for (std::int64_t y = -height; y <= height; ++y) {
      for (std::int64_t w = -height; w <= height; ++w) {
        if (z == 0 && y == 0 && w == 0) continue;
        i128 v = 3 * static_cast<i128>(z) * z * z + 4 * static_cast<i128>(y) * y * y + 5 * static_cast<i128>(w) * w * w;
        if (v != rhs) continue;
        if (rhs == 0 && std::gcd(std::gcd(z, y), w) != 1) continue;
        out.push_back({z, y, w});
      }
    }
  }
  return out;
}

}  // namespace diag
