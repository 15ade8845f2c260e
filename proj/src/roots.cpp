#include <algorithm>

#include "diag/poly.hpp"
#include "intpoly.hpp"

namespace diag {

namespace {

unsigned long eval_mod(const detail::IntVec& f, unsigned long x, unsigned long p) {
  unsigned long acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = (acc * x + mpz_fdiv_ui(it->get_mpz_t(), p)) % p;
  }
  return acc;
}

Integer eval_mod(const detail::IntVec& f, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = acc * x + *it;
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

detail::IntVec derivative(const detail::IntVec& f) {
  detail::IntVec out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<unsigned long>(i));
  return out;
}

// Smallest prime p with p ∤ lc(f) and f squarefree mod p.
unsigned long good_prime(const detail::IntVec& f) {
  Integer p = 2;
  const detail::IntVec df = derivative(f);
  while (true) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    unsigned long q = mpz_get_ui(p.get_mpz_t());
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), q)) continue;
    // squarefree mod q iff gcd(f, f') = 1 mod q
    std::vector<long> a, b;
    for (const auto& c : f) a.push_back(static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), q)));
    for (const auto& c : df) b.push_back(static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), q)));
    auto trim = [](std::vector<long>& v) {
      while (!v.empty() && v.back() == 0) v.pop_back();
    };
    auto inv = [q](long x) {
      Integer r;
      Integer xx = x;
      Integer qq = static_cast<unsigned long>(q);
      mpz_invert(r.get_mpz_t(), xx.get_mpz_t(), qq.get_mpz_t());
      return r.get_si();
    };
    trim(a);
    trim(b);
    const long m = static_cast<long>(q);
    while (!b.empty()) {
      long ib = inv(b.back());
      while (a.size() >= b.size()) {
        long c = a.back() * ib % m;
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - c * b[j]) % m + m) % m;
        trim(a);
      }
      std::swap(a, b);
    }
    if (a.size() == 1) return q;
  }
}

std::optional<Rational> reconstruct(const Integer& u, const Integer& m, const Integer& nbound,
                                    const Integer& dbound) {
  Integer r0 = m, r1 = u, s0 = 0, s1 = 1;
  while (r1 > nbound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (s1 == 0 || abs(s1) > dbound) return std::nullopt;
  Rational out(r1, s1);
  out.canonicalize();
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& f) {
  if (f.is_zero()) throw InvalidInput("rational roots of the zero polynomial");
  std::vector<Rational> roots;
  Poly g = f;
  if (g.t_valuation() > 0) {
    roots.emplace_back(0);
    g = exact_div(g, Poly::monomial(1, g.t_valuation()));
  }
  g = squarefree_part(g);
  if (g.degree() >= 1) {
    Integer den;
    auto h = detail::primitive(detail::to_integer(g, den));
    const Integer nbound = abs(h.front());
    const Integer dbound = abs(h.back());
    const Integer target = 2 * nbound * dbound + 1;
    const unsigned long p = good_prime(h);
    const auto dh = derivative(h);
    for (unsigned long r = 0; r < p; ++r) {
      if (eval_mod(h, r, p) != 0) continue;
      Integer x = r;
      Integer m = p;
      while (m < target) {
        m = m * m;
        Integer fx = eval_mod(h, x, m);
        Integer dfx = eval_mod(dh, x, m);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), m.get_mpz_t());
        x = x - fx * inv;
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
      }
      auto cand = reconstruct(x, m, nbound, dbound);
      if (cand && g.eval(*cand) == 0) roots.push_back(*cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace diag
