#include "diag/quartic_surface.hpp"

#include <map>

namespace diag {

const Matrix6& table1() {
  static const Matrix6 m = {{{-2, 1, 1, 0, 2, 0},
                             {1, -2, 0, 1, 2, 0},
                             {1, 0, -2, 1, 0, 0},
                             {0, 1, 1, -2, 0, 0},
                             {2, 2, 0, 0, -2, 2},
                             {0, 0, 0, 0, 2, -4}}};
  return m;
}

long pairing(const DivisorClass& d1, const DivisorClass& d2) {
  const auto& m = table1();
  long s = 0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) s += d1[i] * m[i][j] * d2[j];
  }
  return s;
}

long degree(const DivisorClass& d) { return d[0] + d[1] + d[2] + d[3] + 2 * d[4] + 2 * d[5]; }

GenusDegree genus_and_degree(const DivisorClass& d) {
  long self = pairing(d, d);
  GenusDegree g;
  g.half_integral = self % 2 != 0;
  g.genus = 1 + self / 2;
  g.degree = degree(d);
  return g;
}

namespace {

using Lin = std::array<long, 6>;

constexpr Lin kDegree = {1, 1, 1, 1, 2, 2};

struct Square {
  long coeff;
  Lin form;
};

// d^2 - 4(D.D) = sum coeff * (form . n)^2
std::vector<Square> five_square_terms() {
  auto minus_d_plus = [](Lin extra) {
    Lin out{};
    for (int i = 0; i < 6; ++i) out[i] = extra[i] - kDegree[i];
    return out;
  };
  return {
      {1, minus_d_plus({0, 0, 0, 0, 4, 0})},
      {4, minus_d_plus({0, 1, 1, 2, 3, 2})},
      {4, minus_d_plus({0, 2, 2, 0, 2, 2})},
      {4, {0, 1, -1, 0, -1, 0}},
      {16, {0, 0, 0, 0, 0, 1}},
  };
}

long dot(const Lin& f, const DivisorClass& d) {
  long s = 0;
  for (int i = 0; i < 6; ++i) s += f[i] * d[i];
  return s;
}

}  // namespace

long five_squares(const DivisorClass& d) {
  long s = 0;
  for (const auto& sq : five_square_terms()) {
    long v = dot(sq.form, d);
    s += sq.coeff * v * v;
  }
  return s;
}

bool sum_of_squares_identity() {
  Matrix6 lhs{}, rhs{};
  const auto& m = table1();
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) lhs[i][j] = kDegree[i] * kDegree[j] - 4 * m[i][j];
  }
  for (const auto& sq : five_square_terms()) {
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) rhs[i][j] += sq.coeff * sq.form[i] * sq.form[j];
    }
  }
  return lhs == rhs;
}

Integer table1_determinant() {
  std::vector<std::vector<Rational>> a(6, std::vector<Rational>(6));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) a[i][j] = table1()[i][j];
  }
  Rational det = 1;
  for (int c = 0; c < 6; ++c) {
    int piv = -1;
    for (int r = c; r < 6; ++r) {
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < 6; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (int k = c; k < 6; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return Integer(det.get_num());
}

SurfaceParametrization h4_parametrization(H4Curve which) {
  auto P = [](std::initializer_list<long> c) { return Poly::from_ints(c); };
  if (which == H4Curve::degree3) {
    return {P({4, -2, 4, 1}), P({4, 2, 4, -1}), P({2, -4, -1, -1}), P({2, 4, -1, 1}), Rational(4)};
  }
  return {P({-64, -24, -24, 132, -144, 138, -22, 9}), P({-96, 8, -24, -252, 168, -78, 42, -7}),
          P({-56, 168, -156, 168, -126, -6, 1, -6}), P({-72, 88, -276, 144, -66, 6, 3, 4}), Rational(4)};
}

Poly surface_residual(const SurfaceParametrization& s) {
  return s.x.pow(4) - s.y.pow(4) - s.h * (s.z.pow(4) - s.w.pow(4));
}

bool verify_h4_parametrization(H4Curve which) { return surface_residual(h4_parametrization(which)).is_zero(); }

namespace {

// Sparse polynomials in (x, y, z, theta).
using Mono = std::array<int, 4>;
using MPoly = std::map<Mono, Rational>;

MPoly var(int i, const Rational& c = 1) {
  Mono m{};
  m[static_cast<std::size_t>(i)] = 1;
  return {{m, c}};
}

MPoly constant(const Rational& c) { return c == 0 ? MPoly{} : MPoly{{Mono{}, c}}; }

MPoly add(const MPoly& f, const MPoly& g, const Rational& sg = 1) {
  MPoly out = f;
  for (const auto& [m, c] : g) {
    out[m] += sg * c;
    if (out[m] == 0) out.erase(m);
  }
  return out;
}

MPoly mul(const MPoly& f, const MPoly& g) {
  MPoly out;
  for (const auto& [m1, c1] : f) {
    for (const auto& [m2, c2] : g) {
      Mono m;
      for (int i = 0; i < 4; ++i) m[i] = m1[i] + m2[i];
      out[m] += c1 * c2;
      if (out[m] == 0) out.erase(m);
    }
  }
  return out;
}

MPoly pw(const MPoly& f, int e) {
  MPoly out = constant(1);
  for (int i = 0; i < e; ++i) out = mul(out, f);
  return out;
}

// Replace theta by a rational value.
MPoly specialize(const MPoly& f, const Rational& theta) {
  MPoly out;
  for (const auto& [m, c] : f) {
    Mono k = m;
    k[3] = 0;
    out[k] += c * power(theta, static_cast<unsigned long>(m[3]));
    if (out[k] == 0) out.erase(k);
  }
  return out;
}

struct ConicCheck {
  MPoly lhs;  // x^4 - y^4 - theta^4 z^4 + (theta z - x + y)^4
  MPoly rhs;  // (x - y)(x - theta z)(conic)
};

ConicCheck conic_sides() {
  MPoly x = var(0), y = var(1), z = var(2), th = var(3);
  MPoly thz = mul(th, z);
  // theta * w = theta z - (x - y), so theta^4 (z^4 - w^4) = theta^4 z^4 - (theta z - x + y)^4
  MPoly tw = add(thz, add(x, y, -1), -1);
  MPoly lhs = add(add(pw(x, 4), pw(y, 4), -1), add(pw(thz, 4), pw(tw, 4), -1), -1);
  MPoly conic;
  for (const auto& term : {mul(x, x), mul(constant(-1), mul(x, y)), mul(constant(2), mul(y, y)),
                           mul(constant(-1), mul(thz, x)), mul(constant(3), mul(thz, y)),
                           mul(constant(2), mul(thz, thz))}) {
    conic = add(conic, term);
  }
  MPoly rhs = mul(mul(add(x, y, -1), add(x, thz, -1)), conic);
  return {lhs, rhs};
}

// c with f = c g, or 0.
Rational proportional(const MPoly& f, const MPoly& g) {
  if (f.empty() || g.empty() || f.size() != g.size()) return 0;
  Rational c = f.begin()->second / g.begin()->second;
  for (const auto& [m, v] : g) {
    auto it = f.find(m);
    if (it == f.end() || it->second != c * v) return 0;
  }
  return c;
}

}  // namespace

Rational verify_hyperplane_conic() {
  auto s = conic_sides();
  return proportional(s.lhs, s.rhs);
}

bool verify_hyperplane_conic_at(const Rational& theta) {
  if (theta == 0) throw InvalidInput("theta must be nonzero");
  auto s = conic_sides();
  return proportional(specialize(s.lhs, theta), specialize(s.rhs, theta)) != 0;
}

}  // namespace diag
