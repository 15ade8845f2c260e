#include "diag/rational.hpp"

#include <algorithm>
#include <cctype>

namespace diag {

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  auto s = strip(text);
  if (!valid_integer_text(s)) throw InvalidInput("not an integer: '" + std::string(text) + "'");
  return integer_from(s);
}

Rational parse_rational(std::string_view text) {
  auto s = strip(text);
  auto slash = s.find('/');
  auto num_text = s.substr(0, slash);
  if (!valid_integer_text(num_text)) {
    throw InvalidInput("not a rational: '" + std::string(text) + "'");
  }
  Integer den = 1;
  if (slash != std::string_view::npos) {
    auto den_text = s.substr(slash + 1);
    if (!valid_integer_text(den_text)) {
      throw InvalidInput("not a rational: '" + std::string(text) + "'");
    }
    den = integer_from(den_text);
    if (den == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
  }
  Rational r(integer_from(num_text), den);
  r.canonicalize();
  return r;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw InvalidInput("isqrt of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Integer> exact_root(const Integer& n, unsigned long k) {
  if (k == 0) throw InvalidInput("zeroth root");
  if (n < 0 && k % 2 == 0) return std::nullopt;
  Integer r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

std::optional<Rational> exact_root(const Rational& r, unsigned long k) {
  auto num = exact_root(Integer(r.get_num()), k);
  if (!num) return std::nullopt;
  auto den = exact_root(Integer(r.get_den()), k);
  if (!den) return std::nullopt;
  Rational out(*num, *den);
  out.canonicalize();
  return out;
}

Integer power(const Integer& z, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), z.get_mpz_t(), e);
  return out;
}

Rational power(const Rational& r, unsigned long e) {
  Rational out(power(Integer(r.get_num()), e), power(Integer(r.get_den()), e));
  return out;  // already reduced: gcd(p^e, q^e) = 1
}

Integer igcd(const Integer& x, const Integer& y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

Integer ilcm(const Integer& x, const Integer& y) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return l;
}

}  // namespace diag

namespace diag {

namespace {

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) {
      Integer out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = igcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = x - ys;
        g = igcd(abs(diff), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
  if (n == 0) throw InvalidInput("factorization of zero");
  Integer m = abs(n);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p < 1000 && m > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      primes.emplace_back(p);
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  factor_into(m, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.emplace_back(p, 1U);
  }
  return out;
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw InvalidInput("valuation of zero");
  Integer m = n;
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

}  // namespace diag
