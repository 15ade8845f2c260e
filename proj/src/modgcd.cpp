#include <cstdint>
#include <functional>
#include <limits>

#include "intpoly.hpp"

namespace diag::detail {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ModVec = std::vector<u64>;

constexpr std::size_t kKroneckerThreshold = 24;

std::size_t bit_length(const Integer& z) {
  return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

Integer pack(const IntVec& v, std::size_t lo, std::size_t hi, std::size_t k) {
  if (hi - lo == 1) return v[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  Integer high = pack(v, mid, hi, k);
  Integer out;
  mpz_mul_2exp(out.get_mpz_t(), high.get_mpz_t(), k * (mid - lo));
  out += pack(v, lo, mid, k);
  return out;
}

// value = sum d_i 2^{ki} with every |d_i| < 2^{k-1}.
void unpack(const Integer& value, std::size_t n, std::size_t k, IntVec& out, std::size_t offset) {
  if (n == 1) {
    out[offset] = value;
    return;
  }
  std::size_t nlo = n / 2;
  std::size_t bits = k * nlo;
  Integer low;
  mpz_fdiv_r_2exp(low.get_mpz_t(), value.get_mpz_t(), bits);
  Integer half;
  mpz_setbit(half.get_mpz_t(), bits - 1);
  if (low >= half) low -= half * 2;
  Integer high = value - low;
  mpz_fdiv_q_2exp(high.get_mpz_t(), high.get_mpz_t(), bits);
  unpack(low, nlo, k, out, offset);
  unpack(high, n - nlo, k, out, offset + nlo);
}

IntVec mul_kronecker(const IntVec& f, const IntVec& g) {
  std::size_t bf = 0, bg = 0;
  for (const auto& c : f) bf = std::max(bf, bit_length(c));
  for (const auto& c : g) bg = std::max(bg, bit_length(c));
  std::size_t terms = std::min(f.size(), g.size());
  std::size_t k = bf + bg + bit_length(Integer(static_cast<unsigned long>(terms))) + 2;
  Integer pf = pack(f, 0, f.size(), k);
  Integer pg = pack(g, 0, g.size(), k);
  Integer prod = pf * pg;
  IntVec out(f.size() + g.size() - 1);
  unpack(prod, out.size(), k, out, 0);
  return out;
}

IntVec mul_schoolbook(const IntVec& f, const IntVec& g) {
  IntVec out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), f[i].get_mpz_t(), g[j].get_mpz_t());
    }
  }
  return out;
}

// ---- arithmetic modulo a word-sized prime ----

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim_mod(ModVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

ModVec reduce(const IntVec& f, u64 p) {
  ModVec out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  trim_mod(out);
  return out;
}

// In-place remainder a mod b, b nonzero.
void rem_mod(ModVec& a, const ModVec& b, u64 p) {
  const std::size_t db = b.size() - 1;
  u64 inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    u64 q = mulmod(a.back(), inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) {
      u64 sub = mulmod(q, b[j], p);
      u64& x = a[shift + j];
      x = x >= sub ? x - sub : x + p - sub;
    }
    trim_mod(a);
  }
}

ModVec gcd_mod(ModVec a, ModVec b, u64 p) {
  while (!b.empty()) {
    rem_mod(a, b, p);
    std::swap(a, b);
  }
  u64 inv = invmod(a.back(), p);
  for (auto& x : a) x = mulmod(x, inv, p);
  return a;
}

// Exact quotient test over Z; cand has content 1.
bool divides_exactly(const IntVec& cand, const IntVec& f) {
  if (cand.size() > f.size()) return false;
  IntVec rem = f;
  const Integer& lc = cand.back();
  Integer q;
  while (rem.size() >= cand.size()) {
    if (!mpz_divisible_p(rem.back().get_mpz_t(), lc.get_mpz_t())) return false;
    mpz_divexact(q.get_mpz_t(), rem.back().get_mpz_t(), lc.get_mpz_t());
    std::size_t shift = rem.size() - cand.size();
    for (std::size_t j = 0; j < cand.size(); ++j) {
      mpz_submul(rem[shift + j].get_mpz_t(), q.get_mpz_t(), cand[j].get_mpz_t());
    }
    trim(rem);
  }
  return rem.empty();
}

const std::vector<u64>& prime_table() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    Integer p = Integer(1) << 61;
    for (int i = 0; i < 4096; ++i) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      out.push_back(mpz_get_ui(p.get_mpz_t()));
    }
    return out;
  }();
  return primes;
}

}  // namespace

void trim(IntVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

IntVec to_integer(const Poly& f, Integer& den) {
  den = f.denominator_lcm();
  IntVec out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    Integer scale = den / Integer(c.get_den());
    out.emplace_back(Integer(c.get_num()) * scale);
  }
  return out;
}

Poly from_integer(const IntVec& v, const Integer& den) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& c : v) out.emplace_back(c, den);
  return Poly(std::move(out));
}

IntVec mul(const IntVec& f, const IntVec& g) {
  if (f.empty() || g.empty()) return {};
  if (std::min(f.size(), g.size()) >= kKroneckerThreshold) return mul_kronecker(f, g);
  return mul_schoolbook(f, g);
}

Integer content(const IntVec& v) {
  Integer g = 0;
  for (const auto& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntVec primitive(const IntVec& v) {
  IntVec out = v;
  trim(out);
  if (out.empty()) return out;
  Integer c = content(out);
  if (out.back() < 0) c = -c;
  if (c != 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return out;
}

IntVec gcd(const IntVec& f, const IntVec& g) {
  if (f.size() == 1 || g.size() == 1) return {Integer(1)};
  const Integer gamma = igcd(f.back(), g.back());
  IntVec acc;
  Integer modulus = 1;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  IntVec previous;
  for (u64 p : prime_table()) {
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p) || mpz_divisible_ui_p(g.back().get_mpz_t(), p)) {
      continue;
    }
    ModVec h = gcd_mod(reduce(f, p), reduce(g, p), p);
    std::size_t d = h.size() - 1;
    if (d == 0) return {Integer(1)};
    if (d > best) continue;  // unlucky prime
    if (d < best) {
      best = d;
      acc.assign(d + 1, Integer(0));
      modulus = 1;
      previous.clear();
    }
    u64 gm = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    u64 minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t i = 0; i <= d; ++i) {
      u64 target = mulmod(h[i], gm, p);
      u64 cur = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
      u64 diff = target >= cur ? target - cur : target + p - cur;
      u64 k = mulmod(diff, minv, p);
      mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), k);
    }
    modulus *= static_cast<unsigned long>(p);
    Integer half = modulus / 2;
    IntVec cand(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) cand[i] = acc[i] > half ? Integer(acc[i] - modulus) : acc[i];
    cand = primitive(cand);
    if (cand == previous && divides_exactly(cand, f) && divides_exactly(cand, g)) return cand;
    previous = std::move(cand);
  }
  throw Error("modular gcd did not converge");
}

}  // namespace diag::detail
