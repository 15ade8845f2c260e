#include "diag/pencils.hpp"

#include <algorithm>
#include <numeric>

namespace diag {

namespace {

Rational bil(const Quad& q, const Quad& x, const Quad& y) {
  return q[0] * x[0] * y[0] + q[1] * x[1] * y[1] - q[2] * x[2] * y[2] - q[3] * x[3] * y[3];
}

Quad dual(const Quad& q, const Quad& p) { return {q[0] * p[0], q[1] * p[1], -q[2] * p[2], -q[3] * p[3]}; }

// Primitive integer form and the scalar with v = scale * form.
std::pair<LinearForm, Rational> primitive_form(const Quad& v) {
  Integer l = 1;
  for (const auto& x : v) l = ilcm(l, Integer(x.get_den()));
  LinearForm out;
  Integer g = 0;
  for (int i = 0; i < 4; ++i) {
    Rational s = v[i] * l;
    out[i] = s.get_num();
    g = igcd(g, out[i]);
  }
  if (g == 0) throw Degenerate("zero linear form in split");
  for (auto& x : out) x /= g;
  Rational scale(g, l);
  scale.canonicalize();
  return {out, scale};
}

// Two basis vectors of {x : r1.x = r2.x = 0} for independent rows.
std::array<Quad, 2> kernel2(Quad r1, Quad r2) {
  std::array<Quad, 2> rows{r1, r2};
  std::array<int, 2> piv{};
  for (int k = 0; k < 2; ++k) {
    int p = 0;
    while (p < 4 && rows[k][p] == 0) ++p;
    if (p == 4) throw Degenerate("dependent hyperbolic pair");
    piv[k] = p;
    Rational inv = 1 / rows[k][p];
    for (auto& x : rows[k]) x *= inv;
    int o = 1 - k;
    Rational f = rows[o][p];
    for (int j = 0; j < 4; ++j) rows[o][j] -= f * rows[k][j];
  }
  std::array<Quad, 2> basis;
  int b = 0;
  for (int free = 0; free < 4; ++free) {
    if (free == piv[0] || free == piv[1]) continue;
    Quad v{0, 0, 0, 0};
    v[free] = 1;
    for (int k = 0; k < 2; ++k) v[piv[k]] = -rows[k][free];
    basis[b++] = v;
  }
  return basis;
}

Quad combo(const Rational& x, const Quad& u, const Rational& y, const Quad& v) {
  return {x * u[0] + y * v[0], x * u[1] + y * v[1], x * u[2] + y * v[2], x * u[3] + y * v[3]};
}

Poly lin_t(const LinearForm& l, int i) { return Poly(Rational(l[i])); }

}  // namespace

bool check_split(const QuadSplit& s) {
  if (s.mu == 0) return false;
  const auto& L = s.L;
  const Quad diag{s.coeffs[0], s.coeffs[1], -s.coeffs[2], -s.coeffs[3]};
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      Integer c = L[0][i] * L[1][j] - L[2][i] * L[3][j];
      if (i != j) c += L[0][j] * L[1][i] - L[2][j] * L[3][i];
      Rational want = i == j ? s.mu * diag[i] : Rational(0);
      if (Rational(c) != want) return false;
    }
  }
  return true;
}

QuadSplit example_split() {
  auto L = [](long x, long y, long z, long w) { return LinearForm{x, y, z, w}; };
  return {{1, 1, 2, 2}, {L(3, -1, -2, -4), L(7, -1, -10, 0), L(3, 1, -4, -2), L(5, -5, -8, -6)}, 6};
}

QuadSplit remark_split() {
  auto L = [](long x, long y, long z, long w) { return LinearForm{x, y, z, w}; };
  return {{2, 1, 2, 4}, {L(1, 0, 1, 0), L(2, 0, -2, 0), L(0, 1, 0, 2), L(0, -1, 0, 2)}, 1};
}

QuadSplit richmond_split(const Quad& q, std::optional<Quad> p0) {
  for (const auto& x : q) {
    if (x == 0) throw InvalidInput("coefficients must be nonzero");
  }
  if (!is_square(q[0] * q[1] * q[2] * q[3])) throw InvalidInput("abcd is not a square");
  if (!p0) {
    const long h = 10;
    for (long m = 1; m <= h && !p0; ++m) {
      for (long x = -m; x <= m && !p0; ++x)
        for (long y = -m; y <= m && !p0; ++y)
          for (long z = -m; z <= m && !p0; ++z)
            for (long w = -m; w <= m && !p0; ++w) {
              if (std::max({std::labs(x), std::labs(y), std::labs(z), std::labs(w)}) != m) continue;
              Quad v{x, y, z, w};
              if (bil(q, v, v) == 0) p0 = v;
            }
    }
    if (!p0) throw InvalidInput("no rational point of height <= 10 on the quadric; supply one");
  }
  const Quad P0 = *p0;
  if (std::all_of(P0.begin(), P0.end(), [](const Rational& x) { return x == 0; })) {
    throw InvalidInput("P0 must be nonzero");
  }
  if (bil(q, P0, P0) != 0) throw InvalidInput("P0 is not on the quadric");

  Quad P1{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    Quad e{0, 0, 0, 0};
    e[i] = 1;
    Rational b0 = bil(q, P0, e);
    if (b0 != 0) {
      P1 = combo(1, e, -bil(q, e, e) / (2 * b0), P0);
      break;
    }
  }
  auto [w1, w2] = kernel2(dual(q, P0), dual(q, P1));
  Rational q11 = bil(q, w1, w1), q12 = bil(q, w1, w2), q22 = bil(q, w2, w2);
  Quad R0, R1;
  if (q11 == 0) {
    R0 = w1;
    R1 = combo(q22, w1, -2 * q12, w2);
  } else {
    auto root = exact_root(q12 * q12 - q11 * q22, 2);
    if (!root) throw Error("residual binary form is anisotropic");
    R0 = combo((-q12 + *root) / q11, w1, 1, w2);
    R1 = combo((-q12 - *root) / q11, w1, 1, w2);
  }
  // Q(x) = k1 B(x,P0) B(x,P1) + k2 B(x,R0) B(x,R1)
  Rational k1 = 2 / bil(q, P0, P1);
  Rational k2 = 2 / bil(q, R0, R1);
  auto [l1, s1] = primitive_form(dual(q, P0));
  auto [l2, s2] = primitive_form(dual(q, P1));
  auto [l3, s3] = primitive_form(dual(q, R0));
  auto [l4, s4] = primitive_form(dual(q, R1));
  Rational K1 = k1 * s1 * s2, K2 = k2 * s3 * s4;
  Rational rho = -K2 / K1;
  Integer p = rho.get_num(), d = rho.get_den();
  for (auto& x : l2) x *= d;
  for (auto& x : l3) x *= p;
  QuadSplit out{q, {l1, l2, l3, l4}, Rational(d) / K1};
  out.mu.canonicalize();
  if (!check_split(out)) throw Error("split construction failed its identity");
  return out;
}

std::array<Rational, 3> PencilCurve::at(const Rational& t0) const {
  return {abc[0].eval(t0), abc[1].eval(t0), abc[2].eval(t0)};
}

PencilCurve build_pencil(const QuadSplit& split, std::array<int, 3> exponents) {
  if (!check_split(split)) throw InvalidInput("split identity fails");
  for (int e : exponents) {
    if (e < 1) throw InvalidInput("exponents must be positive");
  }
  PencilCurve c{split, exponents, {}, {}};
  const auto& L = split.L;
  const Poly t = Poly::t();
  for (int i = 0; i < 4; ++i) {
    c.eqs[0][i] = lin_t(L[2], i) - t * lin_t(L[0], i);
    c.eqs[1][i] = t * lin_t(L[3], i) - lin_t(L[1], i);
  }
  const auto& e1 = c.eqs[0];
  const auto& e2 = c.eqs[1];
  if (e1[0].is_zero() && e2[0].is_zero()) throw Degenerate("x drops out of both pencil equations");
  for (int i = 1; i < 4; ++i) c.abc[i - 1] = e2[0] * e1[i] - e1[0] * e2[i];
  if (std::all_of(c.abc.begin(), c.abc.end(), [](const Poly& f) { return f.is_zero(); })) {
    throw Degenerate("the pencil equations are dependent");
  }
  return c;
}

XRecovery x_recovery(const PencilCurve& c) {
  const auto& e = c.eqs[0].front().is_zero() ? c.eqs[1] : c.eqs[0];
  return {-e[1], -e[2], -e[3], e[0]};
}

namespace {

std::array<Integer, 3> powers(const PencilCurve& c, const std::array<Integer, 3>& yzw) {
  std::array<Integer, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = power(yzw[i], static_cast<unsigned long>(c.exponents[i]));
  return out;
}

}  // namespace

Rational recover_x(const PencilCurve& c, const Rational& t0, const std::array<Integer, 3>& yzw) {
  auto P = powers(c, yzw);
  for (const auto& e : c.eqs) {
    Rational ex = e[0].eval(t0);
    if (ex == 0) continue;
    Rational s = 0;
    for (int i = 0; i < 3; ++i) s += e[i + 1].eval(t0) * Rational(P[i]);
    return -s / ex;
  }
  throw Degenerate("x cannot be recovered at this t");
}

Rational surface_residual(const PencilCurve& c, const Rational& x, const std::array<Integer, 3>& yzw) {
  auto P = powers(c, yzw);
  const auto& k = c.split.coeffs;
  return k[0] * x * x + k[1] * Rational(P[0] * P[0]) - k[2] * Rational(P[1] * P[1]) - k[3] * Rational(P[2] * P[2]);
}

CurvePoint<Rational> Weierstrass236::map(const Rational& t0, const std::array<Rational, 3>& yzw) const {
  const auto& [y, z, w] = yzw;
  if (w == 0) throw Degenerate("w = 0 has no image in the affine model");
  Rational a = A.eval(t0), b = B.eval(t0);
  return CurvePoint<Rational>::affine(-a * b * z / (w * w), a * a * b * y / (w * w * w));
}

WeierstrassCurve<Rational> Weierstrass236::at(const Rational& t0) const {
  Rational a = A.eval(t0), b = B.eval(t0), c = C.eval(t0);
  return WeierstrassCurve<Rational>(Rational(0), -a * a * a * b * b * c);
}

Weierstrass236 weierstrass_236(const PencilCurve& c) {
  if (c.exponents != std::array<int, 3>{2, 3, 6}) throw InvalidInput("Weierstrass form needs exponents (2,3,6)");
  const auto& [A, B, C] = c.abc;
  Poly k = -(A * A * A * B * B * C);
  return {A, B, C, WeierstrassCurve<RatFunc>(RatFunc(), RatFunc(k))};
}

CubicSearch cubic_point_search(const PencilCurve& c, const Rational& t0, long H) {
  if (H < 1) throw InvalidInput("height must be >= 1");
  auto co = c.at(t0);
  CubicSearch out;
  out.height = H;
  out.degenerate = std::any_of(co.begin(), co.end(), [](const Rational& x) { return x == 0; });
  Integer l = 1;
  for (const auto& x : co) l = ilcm(l, Integer(x.get_den()));
  std::array<Integer, 3> k;
  for (int i = 0; i < 3; ++i) k[i] = Integer(co[i] * l);
  const bool odd = c.exponents[0] % 2 && c.exponents[1] % 2 && c.exponents[2] % 2;
  std::array<std::vector<Integer>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    for (long v = -H; v <= H; ++v) pw[i].push_back(k[i] * power(Integer(v), static_cast<unsigned long>(c.exponents[i])));
  }
  for (long y = -H; y <= H; ++y) {
    for (long z = -H; z <= H; ++z) {
      Integer s = pw[0][y + H] + pw[1][z + H];
      for (long w = -H; w <= H; ++w) {
        if (s + pw[2][w + H] != 0) continue;
        if (std::gcd(std::gcd(y, z), w) != 1) continue;
        if (odd) {
          long lead = y != 0 ? y : (z != 0 ? z : w);
          if (lead < 0) continue;
        }
        out.points.push_back({Integer(y), Integer(z), Integer(w)});
      }
    }
  }
  auto height = [](const std::array<Integer, 3>& p) {
    return std::max({abs(p[0]), abs(p[1]), abs(p[2])});
  };
  std::stable_sort(out.points.begin(), out.points.end(), [&](const auto& u, const auto& v) {
    Integer hu = height(u), hv = height(v);
    if (hu != hv) return hu < hv;
    return u < v;
  });
  return out;
}

std::optional<int> plane_cubic_order(const std::array<Rational, 3>& coeffs, const std::array<Rational, 3>& p) {
  auto norm = [](Triple<Rational> v) {
    Integer l = 1;
    for (const auto& x : v) l = ilcm(l, Integer(x.get_den()));
    Integer g = 0;
    for (auto& x : v) {
      x *= l;
      g = igcd(g, Integer(x.get_num()));
    }
    for (auto& x : v) x /= g;
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (*lead < 0) {
      for (auto& x : v) x = -x;
    }
    return v;
  };
  DiagonalCubic<Rational, decltype(norm)> cubic(coeffs[0], coeffs[1], coeffs[2], norm);
  Triple<Rational> o{p[0], p[1], p[2]};
  if (!cubic.contains(o)) throw InvalidInput("point is not on the cubic");
  Triple<Rational> g = cubic.third(o, o);
  Triple<Rational> acc = norm(o);
  for (int k = 1; k <= 12; ++k) {
    acc = cubic.add(o, acc, g);
    if (cubic.same_point(acc, o)) return k;
  }
  return std::nullopt;
}

}  // namespace diag
