#include "diag/fibrations.hpp"

#include <algorithm>
#include <numeric>

#include "diag/elliptic.hpp"

namespace diag {

namespace {

const std::vector<std::array<int, 4>>& fixed_patterns() {
  static const std::vector<std::array<int, 4>> p = {
      {2, 6, 6, 6}, {2, 4, 8, 8}, {2, 8, 4, 8}, {2, 4, 6, 12}, {2, 6, 4, 12}, {2, 12, 4, 6}, {4, 4, 4, 4}};
  return p;
}

Poly tp(int k) { return Poly::monomial(1, k); }

void check_ab(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw InvalidInput("a and b must be nonzero");
}

void check_m(long m, long least) {
  if (m < least) throw InvalidInput("multiple index must be at least " + std::to_string(least));
}

// Weighted projective point over Q(t) -> polynomial representative.
std::vector<Poly> weighted_poly(std::vector<RatFunc> v, std::vector<int> w) {
  return weighted_reduce(v, w).polys;
}

// z and w enter with even exponents; fix the sign by the constant term.
void positive_constant(Poly& f) {
  if (f.coeff(0) < 0) f = -f;
}

}  // namespace

DiagonalEquation::DiagonalEquation(Rational a_, Rational b_, std::array<int, 4> e)
    : a(std::move(a_)), b(std::move(b_)), exponents(e) {
  check_ab(a, b);
  const auto& pats = fixed_patterns();
  bool ok = std::find(pats.begin(), pats.end(), e) != pats.end();
  if (!ok && e[0] == 2 && e[2] == 6 && e[3] == 6 && e[1] > 0 && e[1] % 6 == 0) ok = true;
  if (!ok) throw InvalidInput("unsupported exponent pattern");
}

std::string DiagonalEquation::name() const {
  std::string out;
  for (int e : exponents) out += std::to_string(e);
  return out;
}

std::array<int, 4> DiagonalEquation::weights() const {
  int l = 1;
  for (int e : exponents) l = std::lcm(l, e);
  return {l / exponents[0], l / exponents[1], l / exponents[2], l / exponents[3]};
}

Poly identity_residual(const ParametricSolution& sol) {
  const auto& eq = sol.equation;
  const auto& e = eq.exponents;
  auto pw = [](const Poly& f, int k) { return f.pow(static_cast<unsigned>(k)); };
  return eq.a * (pw(sol.x, e[0]) - pw(sol.y, e[1])) - eq.b * (pw(sol.z, e[2]) - pw(sol.w, e[3]));
}

bool verify_identity(const ParametricSolution& sol) { return identity_residual(sol).is_zero(); }

bool is_trivial(const ParametricSolution& sol) {
  const auto& eq = sol.equation;
  const auto& e = eq.exponents;
  auto pw = [](const Poly& f, int k) { return f.pow(static_cast<unsigned>(k)); };
  Poly xp = pw(sol.x, e[0]), yq = pw(sol.y, e[1]), zr = pw(sol.z, e[2]), ws = pw(sol.w, e[3]);
  if (xp == yq && zr == ws) return true;
  // a x^p + b w^s = a y^q + b z^r pairs termwise
  if (eq.a * xp == eq.b * zr && eq.a * yq == eq.b * ws) return true;
  if (eq.a * xp == -eq.b * ws && eq.a * yq == -eq.b * zr) return true;
  return false;
}

GcdReport solution_gcd(const ParametricSolution& sol) {
  GcdReport r;
  Integer c = 0;
  for (const auto& f : sol.coords()) {
    r.gcd = poly_gcd(r.gcd, f);
    Integer d = f.denominator_lcm();
    c = igcd(c, d == 1 ? f.integer_content() : Integer(0));
  }
  r.content = c;
  auto coords = sol.coords();
  auto w = sol.equation.weights();
  r.weighted_content = c == 0 ? Integer(0) : weighted_content(coords, w);
  return r;
}

std::array<int, 4> degrees(const ParametricSolution& sol) {
  return {sol.x.degree(), sol.y.degree(), sol.z.degree(), sol.w.degree()};
}

ParametricSolution reduce_coprime(const ParametricSolution& sol) {
  auto w = sol.equation.weights();
  std::vector<RatFunc> v;
  for (const auto& f : sol.coords()) v.emplace_back(f);
  auto red = weighted_reduce(v, w);
  ParametricSolution out = sol;
  out.x = red.polys[0];
  out.y = red.polys[1];
  out.z = red.polys[2];
  out.w = red.polys[3];
  return out;
}

// ---- (2,6,6,6) ----

namespace {

struct PolyTripleNorm {
  Triple<Poly> operator()(const Triple<Poly>& p) const {
    Poly g = poly_gcd(std::span<const Poly>(p.data(), 3));
    if (g.is_zero()) throw Degenerate("zero projective triple");
    std::vector<Poly> v;
    for (const auto& c : p) v.push_back(exact_div(c, g));
    auto n = integer_normalize(v);
    return {n.polys[0], n.polys[1], n.polys[2]};
  }
};

}  // namespace

ParametricSolution gen_2666(const Rational& a, const Rational& b, long m) {
  check_ab(a, b);
  check_m(m, 1);
  Poly t6 = a * tp(6);
  DiagonalCubic<Poly, PolyTripleNorm> cubic(Rational(2) * a * tp(3), t6 - Poly(b), -(t6 + Poly(b)), {});
  Triple<Poly> origin = {tp(1), Poly(-1), Poly(1)};
  Triple<Poly> q = cubic.third(origin, origin);
  Triple<Poly> p = cubic.multiply(origin, q, static_cast<int>(m));
  if (cubic.same_point(p, origin)) throw Degenerate("multiple is the origin");
  const Poly& y = p[0];
  const Poly& z = p[1];
  const Poly& w = p[2];
  Poly x = y.pow(3) + tp(3) * (z.pow(3) - w.pow(3));
  ParametricSolution sol{DiagonalEquation(a, b, {2, 6, 6, 6}), x, y, z, w, "2666", m};
  return reduce_coprime(sol);
}

// ---- (2,4,8,8) and (2,8,4,8) ----

ParametricSolution gen_2488(const Rational& a, const Rational& b, long m) {
  check_ab(a, b);
  check_m(m, 1);
  // v^2 = alpha u^4 + beta with u = z/w, v = y/w^2
  RatFunc den(Rational(2) * a * tp(2));
  RatFunc alpha = RatFunc(a * tp(4) - Poly(b)) / den;
  RatFunc beta = RatFunc(a * tp(4) + Poly(b)) / den;
  QuarticCurve<RatFunc> c(alpha, beta, RatFunc(tp(1)));
  QuarticGroup<RatFunc> g(c, {RatFunc(1), RatFunc(tp(1))});
  auto pt = g.multiply({RatFunc(1), RatFunc(-tp(1))}, m);
  // weights y:2, z:1, w:1
  auto yzw = weighted_poly({pt.y, pt.x, RatFunc(1)}, {2, 1, 1});
  const Poly& y = yzw[0];
  Poly z = yzw[1];
  Poly w = yzw[2];
  positive_constant(z);
  positive_constant(w);
  Poly x = -(y * y) + tp(2) * (z.pow(4) + w.pow(4));
  ParametricSolution sol{DiagonalEquation(a, b, {2, 4, 8, 8}), x, y, z, w, "2488", m};
  return reduce_coprime(sol);
}

ParametricSolution gen_2848(const Rational& a, const Rational& b, long m) {
  check_ab(a, b);
  check_m(m, 1);
  // v^2 = alpha X^4 + beta with X = y/(t w), v = z/w^2
  RatFunc den(Poly(b) - a * tp(8));
  RatFunc alpha = RatFunc(Rational(-2) * a * tp(8)) / den;
  RatFunc beta = RatFunc(Poly(b) + a * tp(8)) / den;
  QuarticCurve<RatFunc> c(alpha, beta, RatFunc(1));
  QuarticGroup<RatFunc> g(c, {RatFunc(1), RatFunc(1)});
  auto pt = g.multiply({RatFunc(-1), RatFunc(1)}, m);
  // weights y:1, z:2, w:1
  auto yzw = weighted_poly({pt.x * RatFunc(tp(1)), pt.y, RatFunc(1)}, {1, 2, 1});
  const Poly& y = yzw[0];
  Poly z = yzw[1];
  Poly w = yzw[2];
  positive_constant(z);
  positive_constant(w);
  Poly x = -y.pow(4) + tp(4) * (z * z + w.pow(4));
  ParametricSolution sol{DiagonalEquation(a, b, {2, 8, 4, 8}), x, y, z, w, "2848", m};
  return reduce_coprime(sol);
}

// ---- (2,4,6,12) ----

std::vector<DuplicationStep> recurrence_24612(const Rational& a, const Rational& b, long n) {
  check_ab(a, b);
  check_m(n, 1);
  const Poly f = a * tp(12) - Poly(b);
  const Poly g = a * tp(12) + Poly(b);
  Poly z = Poly(1), w = Poly(1), y = tp(3);
  std::vector<DuplicationStep> steps;
  for (long k = 0; k < n; ++k) {
    Poly z3 = z.pow(3);
    Poly w6 = w.pow(6);
    DuplicationStep s;
    s.z_raw = Rational(2) * a * tp(2) * z * (f * z3 - Rational(8) * g * w6);
    s.w_raw = Rational(4) * a * tp(4) * w * y;
    s.y_raw = Rational(2) * a * (-(f * f * z3 * z3) - Rational(20) * g * f * z3 * w6 + Rational(8) * g * g * w6 * w6);
    auto red = weighted_reduce(std::vector<RatFunc>{s.z_raw, s.w_raw, s.y_raw}, std::vector<int>{2, 1, 3});
    s.z = red.polys[0];
    s.w = red.polys[1];
    s.y = red.polys[2];
    s.lambda = red.lambda;
    z = s.z;
    w = s.w;
    y = s.y;
    steps.push_back(std::move(s));
  }
  return steps;
}

ParametricSolution gen_24612(const Rational& a, const Rational& b, long n) {
  auto steps = recurrence_24612(a, b, n);
  const auto& last = steps.back();
  Poly x = -(last.y * last.y) + tp(6) * (last.z.pow(3) + last.w.pow(6));
  ParametricSolution sol{DiagonalEquation(a, b, {2, 4, 6, 12}), x, last.y, last.z, last.w, "24612", n};
  return reduce_coprime(sol);
}

// ---- (2,6,4,12) and (2,12,4,6) ----

ParametricSolution gen_26412(const Rational& a, const Rational& b, long m) {
  check_ab(a, b);
  check_m(m, 2);
  const Poly f = a * tp(12) - Poly(b);
  const Poly g = a * tp(12) + Poly(b);
  WeierstrassCurve<RatFunc> e(RatFunc(0), RatFunc(Rational(-4) * a * a * f.pow(3) * g));
  auto q = CurvePoint<RatFunc>::affine(RatFunc(Rational(2) * a * tp(4) * f), RatFunc(Rational(2) * a * f * f));
  auto p = ec_multiply(e, q, m);
  if (p.infinite) throw Degenerate("multiple is the point at infinity");
  // y/w^2 = X / (-2at^2 f), z/w^3 = Y / (2a f^2); weights y:2, z:3, w:1
  RatFunc y = p.x / RatFunc(Rational(-2) * a * tp(2) * f);
  RatFunc z = p.y / RatFunc(Rational(2) * a * f * f);
  auto yzw = weighted_poly({y, z, RatFunc(1)}, {2, 3, 1});
  Poly x = yzw[0].pow(3) + tp(6) * (yzw[1] * yzw[1] + yzw[2].pow(6));
  ParametricSolution sol{DiagonalEquation(a, b, {2, 6, 4, 12}), x, yzw[0], yzw[1], yzw[2], "26412", m};
  return reduce_coprime(sol);
}

ParametricSolution gen_21246(const Rational& a, const Rational& b, long m) {
  check_ab(a, b);
  check_m(m, 2);
  const Poly f = a * tp(12) - Poly(b);
  const Poly g = a * tp(12) + Poly(b);
  WeierstrassCurve<RatFunc> e(RatFunc(0), RatFunc(Rational(2) * a * f.pow(3) * g * g));
  auto q = CurvePoint<RatFunc>::affine(RatFunc(-(f * g), tp(4)), RatFunc(-(f * f * g), tp(6)));
  auto p = ec_multiply(e, q, m);
  if (p.infinite) throw Degenerate("multiple is the point at infinity");
  // w/y^2 = X t^2 / (f g), z/y^3 = Y t^3 / (f^2 g); weights y:1, z:3, w:2
  RatFunc w = p.x * RatFunc(tp(2)) / RatFunc(f * g);
  RatFunc z = p.y * RatFunc(tp(3)) / RatFunc(f * f * g);
  auto yzw = weighted_poly({RatFunc(1), z, w}, {1, 3, 2});
  Poly x = yzw[0].pow(6) - tp(6) * (yzw[1] * yzw[1] - yzw[2].pow(3));
  ParametricSolution sol{DiagonalEquation(a, b, {2, 12, 4, 6}), x, yzw[0], yzw[1], yzw[2], "21246", m};
  return reduce_coprime(sol);
}

// ---- substitution family ----

ParametricSolution cor2_solution(const Rational& a, long n, const Rational& b) {
  check_ab(a, b);
  check_m(n, 1);
  // t = (2b)^{n-1} T^n, y = 2bt = (2bT)^n
  Poly t = power(Rational(2) * b, static_cast<unsigned long>(n - 1)) * tp(static_cast<int>(n));
  Poly t3 = t.pow(3);
  Poly t6 = t3 * t3;
  Poly x = Rational(2) * b * t3 * (Rational(27) * a * a * t6 * t6 + Poly(Rational(5) * b * b));
  Poly y = Rational(2) * b * tp(1);
  Poly z = a * Rational(3) * t6 + Poly(b);
  Poly w = a * Rational(3) * t6 - Poly(b);
  return {DiagonalEquation(a, b, {2, 6 * static_cast<int>(n), 6, 6}), x, y, z, w, "cor2", n};
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"2666", "2488", "2848", "24612", "26412", "21246", "cor2"};
  return names;
}

ParametricSolution generate(const std::string& family, const Rational& a, const Rational& b, long m) {
  if (family == "2666") return gen_2666(a, b, m);
  if (family == "2488") return gen_2488(a, b, m);
  if (family == "2848") return gen_2848(a, b, m);
  if (family == "24612") return gen_24612(a, b, m);
  if (family == "26412") return gen_26412(a, b, m);
  if (family == "21246") return gen_21246(a, b, m);
  if (family == "cor2") return cor2_solution(a, m, b);
  if (family == "4444") {
    throw InvalidInput("family 4444 has no fibration generator; see the cone and h4 checks of the quartic surface");
  }
  throw InvalidInput("unknown family '" + family + "'");
}

}  // namespace diag
