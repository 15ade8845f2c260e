#include "diag/known_forms.hpp"

#include <initializer_list>
#include <utility>

namespace diag {

namespace {

using Terms = std::initializer_list<std::pair<Rational, int>>;

Poly P(Terms terms) {
  Poly f;
  for (const auto& [c, d] : terms) f += Poly::monomial(c, d);
  return f;
}

ParametricSolution make(const Rational& a, const Rational& b, std::array<int, 4> e, Poly x, Poly y, Poly z, Poly w,
                        const char* gen, long m) {
  return {DiagonalEquation(a, b, e), std::move(x), std::move(y), std::move(z), std::move(w), gen, m};
}

Rational p(const Rational& r, unsigned e) { return power(r, e); }

}  // namespace

ParametricSolution known_2666(const Rational& a, const Rational& b) {
  Poly x = P({{54 * a * a * b, 15}, {10 * p(b, 3), 3}});
  return make(a, b, {2, 6, 6, 6}, x, P({{2 * b, 1}}), P({{3 * a, 6}, {b, 0}}), P({{3 * a, 6}, {-b, 0}}), "2666", 1);
}

ParametricSolution known_2488(const Rational& a, const Rational& b) {
  Poly x = P({{-7 * p(b, 8), 2},
              {32 * a * a * p(b, 6), 10},
              {-88 * p(a, 4) * p(b, 4), 18},
              {128 * p(a, 6) * b * b, 26},
              {16 * p(a, 8), 34}});
  Poly y = P({{-3 * p(b, 4), 1}, {4 * p(a, 4), 17}});
  Poly z = P({{b * b, 0}, {-2 * a * b, 4}, {-2 * a * a, 8}});
  Poly w = P({{b * b, 0}, {2 * a * b, 4}, {-2 * a * a, 8}});
  return make(a, b, {2, 4, 8, 8}, x, y, z, w, "2488", 2);
}

ParametricSolution known_2848(const Rational& a, const Rational& b) {
  Poly x = P({{-79 * p(b, 8), 4},
              {600 * a * p(b, 7), 12},
              {3068 * a * a * p(b, 6), 20},
              {18984 * p(a, 3) * p(b, 5), 28},
              {101126 * p(a, 4) * p(b, 4), 36},
              {155112 * p(a, 5) * p(b, 3), 44},
              {172604 * p(a, 6) * b * b, 52},
              {109848 * p(a, 7) * b, 60},
              {28561 * p(a, 8), 68}});
  Poly y = P({{-3 * b * b, 1}, {6 * a * b, 9}, {13 * a * a, 17}});
  Poly z = P({{p(b, 4), 0}, {-52 * a * p(b, 3), 8}, {-138 * a * a * b * b, 16}, {-340 * p(a, 3) * b, 24},
              {-239 * p(a, 4), 32}});
  Poly w = P({{b * b, 0}, {14 * a * b, 8}, {a * a, 16}});
  return make(a, b, {2, 8, 4, 8}, x, y, z, w, "2848", 2);
}

ParametricSolution known_24612(const Rational& a, const Rational& b) {
  Poly x = P({{-4 * a * a * 729 * p(b, 4), 0},
              {-4 * a * a * 2430 * a * p(b, 3), 12},
              {-4 * a * a * 3024 * a * a * b * b, 24},
              {-4 * a * a * 2178 * p(a, 3) * b, 36},
              {4 * a * a * 169 * p(a, 4), 48}});
  Poly y = P({{-54 * a * b * b, 0}, {-36 * a * a * b, 12}, {26 * p(a, 3), 24}});
  Poly z = P({{-18 * a * b, 2}, {-14 * a * a, 14}});
  Poly w = P({{4 * a, 7}});
  return make(a, b, {2, 4, 6, 12}, x, y, z, w, "24612", 1);
}

ParametricSolution known_26412(const Rational& a, const Rational& b) {
  Poly u = P({{a, 12}, {-b, 0}});
  Poly x = P({{8, 6}}) * u * u *
           P({{125 * p(a, 4), 48}, {409 * p(a, 3) * b, 36}, {588 * a * a * b * b, 24}, {256 * a * p(b, 3), 12},
              {80 * p(b, 4), 0}});
  Poly y = P({{-2, 2}}) * u * P({{5 * a, 12}, {4 * b, 0}});
  Poly z = Poly(-4) * u * P({{11 * a * a, 24}, {14 * a * b, 12}, {2 * b * b, 0}});
  Poly w = Poly(2) * u;
  return make(a, b, {2, 6, 4, 12}, x, y, z, w, "26412", 2);
}

ParametricSolution known_21246(const Rational& a, const Rational& b) {
  Poly u = P({{a, 12}, {-b, 0}});
  Poly x = P({{-2, 6}}) * u * u *
           P({{32 * p(a, 4), 48}, {4849 * p(a, 3) * b, 36}, {867 * a * a * b * b, 24}, {115 * a * p(b, 3), 12},
              {-31 * p(b, 4), 0}});
  Poly y = P({{2, 1}}) * u;
  Poly z = u * P({{-71 * a * a, 24}, {-38 * a * b, 12}, {b * b, 0}});
  Poly w = u * P({{17 * a, 12}, {b, 0}});
  return make(a, b, {2, 12, 4, 6}, x, y, z, w, "21246", 2);
}

ParametricSolution known_cor2(const Rational& a, long n) {
  if (n < 1) throw InvalidInput("n must be positive");
  const unsigned long k = static_cast<unsigned long>(n);
  Rational two = 2;
  Poly x = P({{27 * a * a * power(two, 12 * (k - 1) + 3 * k - 2), static_cast<int>(15 * k)},
              {5 * power(two, 3 * k - 2), static_cast<int>(3 * k)}});
  Poly y = P({{2, 1}});
  Rational c = 3 * a * power(two, 6 * (k - 1));
  Poly z = P({{c, static_cast<int>(6 * k)}, {1, 0}});
  Poly w = P({{c, static_cast<int>(6 * k)}, {-1, 0}});
  return make(a, Rational(1), {2, 6 * static_cast<int>(n), 6, 6}, x, y, z, w, "cor2", n);
}

bool equal_up_to_sign(const ParametricSolution& s, const ParametricSolution& t) {
  auto u = s.coords(), v = t.coords();
  for (int i = 0; i < 4; ++i) {
    if (!(u[i] == v[i] || u[i] == -v[i])) return false;
  }
  return true;
}

std::optional<Rational> weighted_equivalence(const ParametricSolution& s, const ParametricSolution& t) {
  if (s.equation.exponents != t.equation.exponents) return std::nullopt;
  auto u = s.coords(), v = t.coords();
  auto w = s.equation.weights();
  std::array<Rational, 4> ratio;
  int best = -1;
  for (int i = 0; i < 4; ++i) {
    if (u[i].is_zero() != v[i].is_zero()) return std::nullopt;
    if (u[i].is_zero()) continue;
    ratio[i] = abs(u[i].leading() / v[i].leading());
    if (!(u[i] == v[i] * ratio[i] || u[i] == -(v[i] * ratio[i]))) return std::nullopt;
    if (best < 0 || w[i] < w[best]) best = i;
  }
  if (best < 0) return Rational(1);
  auto lambda = exact_root(ratio[best], static_cast<unsigned long>(w[best]));
  if (!lambda) return std::nullopt;
  for (int i = 0; i < 4; ++i) {
    if (!u[i].is_zero() && power(*lambda, static_cast<unsigned long>(w[i])) != ratio[i]) return std::nullopt;
  }
  return lambda;
}

}  // namespace diag
