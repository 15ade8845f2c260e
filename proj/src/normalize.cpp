#include "diag/normalize.hpp"

#include <algorithm>

namespace diag {

ScaledList integer_normalize(std::span<const Poly> fs) {
  Integer den = 1;
  Integer content = 0;
  const Poly* first = nullptr;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    if (!first) first = &f;
    den = ilcm(den, f.denominator_lcm());
  }
  if (!first) throw InvalidInput("integer_normalize of an all-zero list");
  for (const auto& f : fs) content = igcd(content, (f * Rational(den)).integer_content());
  Rational scale(content, den);
  scale.canonicalize();
  if (first->leading() < 0) scale = -scale;
  ScaledList out;
  out.scale = scale;
  Rational inv = 1 / scale;
  for (const auto& f : fs) out.polys.push_back(f * inv);
  return out;
}

namespace {

int checked_weight(int w) {
  if (w <= 0) throw InvalidInput("weights must be positive");
  return w;
}

// Largest monic f with f^{w_i} | v_i for every nonzero v_i (one pass finds
// the radical part; the caller loops until nothing is left).
Poly weighted_radical_gcd(const std::vector<Poly>& vs, std::span<const int> weights) {
  Poly g;
  for (const auto& v : vs) g = poly_gcd(g, v);
  if (g.degree() <= 0) return Poly(1);
  Poly r = squarefree_part(g);
  for (std::size_t i = 0; i < vs.size() && r.degree() > 0; ++i) {
    if (vs[i].is_zero()) continue;
    Poly d = vs[i];
    for (int k = 0; k < weights[i] && r.degree() > 0; ++k) {
      r = poly_gcd(r, d);
      d = d.derivative();
    }
  }
  return r.degree() > 0 ? r : Poly(1);
}

}  // namespace

Integer weighted_content(std::span<const Poly> fs, std::span<const int> weights) {
  if (fs.size() != weights.size()) throw InvalidInput("weights and entries differ in length");
  // only primes dividing every nonzero content matter
  Integer common = 0;
  std::vector<Integer> contents;
  for (const auto& f : fs) {
    if (!f.has_integer_coeffs()) throw InvalidInput("weighted_content needs integer polynomials");
    contents.push_back(f.integer_content());
    common = igcd(common, contents.back());
  }
  if (common == 0) throw InvalidInput("weighted content of an all-zero list");
  Integer c = 1;
  if (common == 1) return c;
  for (const auto& [p, e] : factor_integer(common)) {
    unsigned k = e;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (contents[i] == 0) continue;
      k = std::min(k, valuation(contents[i], p) / static_cast<unsigned>(checked_weight(weights[i])));
    }
    c *= power(p, k);
  }
  return c;
}

WeightedReduction weighted_reduce(std::span<const RatFunc> vs, std::span<const int> weights) {
  if (vs.size() != weights.size()) throw InvalidInput("weights and entries differ in length");
  bool any = std::any_of(vs.begin(), vs.end(), [](const RatFunc& v) { return !v.is_zero(); });
  if (!any) throw InvalidInput("weighted reduction of an all-zero list");
  for (int w : weights) checked_weight(w);

  // Polynomial denominators: D = lcm of the denominators, v_i -> D^{w_i} v_i.
  Poly den(1);
  for (const auto& v : vs) den = poly_lcm(den, v.den());
  std::vector<Poly> cur;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    cur.push_back(exact_div(vs[i].num() * den.pow(static_cast<unsigned>(weights[i])), vs[i].den()));
  }

  Poly removed(1);
  while (true) {
    Poly f = weighted_radical_gcd(cur, weights);
    if (f.degree() <= 0) break;
    removed *= f;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (!cur[i].is_zero()) cur[i] = exact_div(cur[i], f.pow(static_cast<unsigned>(weights[i])));
    }
  }

  // Rational coefficients: lambda = lcm of coefficient denominators works
  // for every positive weight.
  Integer cden = 1;
  for (const auto& v : cur) cden = ilcm(cden, v.denominator_lcm());
  if (cden != 1) {
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] *= Rational(power(cden, static_cast<unsigned long>(weights[i])));
  }

  Integer c = weighted_content(cur, weights);
  if (c != 1) {
    for (std::size_t i = 0; i < cur.size(); ++i) {
      cur[i] *= Rational(1, power(c, static_cast<unsigned long>(weights[i])));
    }
  }

  WeightedReduction out;
  out.polys = std::move(cur);
  out.removed_factor = removed;
  Rational scalar(cden, c);
  scalar.canonicalize();
  out.lambda = RatFunc(den * scalar, removed);
  return out;
}

}  // namespace diag
