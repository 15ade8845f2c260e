#pragma once

// Short Weierstrass curves y^2 = x^3 + Ax + B over Q or Q(t), the quartic
// model y^2 = alpha x^4 + beta, and division polynomials.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "diag/ratfunc.hpp"

namespace diag {

inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const Poly& x) { return x.is_zero(); }

template <class F>
struct CurvePoint {
  bool infinite = true;
  F x{};
  F y{};

  static CurvePoint infinity() { return {}; }
  static CurvePoint affine(F x0, F y0) { return {false, std::move(x0), std::move(y0)}; }
  friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
    if (p.infinite || q.infinite) return p.infinite == q.infinite;
    return p.x == q.x && p.y == q.y;
  }
};

template <class F>
struct WeierstrassCurve {
  F A;
  F B;

  WeierstrassCurve(F a, F b) : A(std::move(a)), B(std::move(b)) {
    if (is_zero(F(4) * A * A * A + F(27) * B * B)) throw Degenerate("singular Weierstrass curve (4A^3 + 27B^2 = 0)");
  }

  F discriminant() const { return F(-16) * (F(4) * A * A * A + F(27) * B * B); }
  F rhs(const F& x) const { return x * x * x + A * x + B; }
  bool contains(const CurvePoint<F>& p) const { return p.infinite || p.y * p.y == rhs(p.x); }
};

namespace detail {

template <class F>
CurvePoint<F> add_unchecked(const WeierstrassCurve<F>& e, const CurvePoint<F>& p, const CurvePoint<F>& q) {
  if (p.infinite) return q;
  if (q.infinite) return p;
  F lambda;
  if (p.x == q.x) {
    if (is_zero(p.y + q.y)) return CurvePoint<F>::infinity();
    lambda = (F(3) * p.x * p.x + e.A) / (F(2) * p.y);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  F x3 = lambda * lambda - p.x - q.x;
  F y3 = lambda * (p.x - x3) - p.y;
  return CurvePoint<F>::affine(std::move(x3), std::move(y3));
}

}  // namespace detail

template <class F>
CurvePoint<F> ec_negate(const CurvePoint<F>& p) {
  if (p.infinite) return p;
  return CurvePoint<F>::affine(p.x, -p.y);
}

/// Chord-tangent sum. Throws InvalidInput if either point is off the curve.
template <class F>
CurvePoint<F> ec_add(const WeierstrassCurve<F>& e, const CurvePoint<F>& p, const CurvePoint<F>& q) {
  if (!e.contains(p) || !e.contains(q)) throw InvalidInput("point not on the curve");
  return detail::add_unchecked(e, p, q);
}

/// m*P by double-and-add.
template <class F>
CurvePoint<F> ec_multiply(const WeierstrassCurve<F>& e, const CurvePoint<F>& p, long m) {
  if (m < 0) throw InvalidInput("negative multiplier");
  if (!e.contains(p)) throw InvalidInput("point not on the curve");
  CurvePoint<F> acc = CurvePoint<F>::infinity();
  CurvePoint<F> base = p;
  auto k = static_cast<unsigned long>(m);
  while (k) {
    if (k & 1UL) acc = detail::add_unchecked(e, acc, base);
    k >>= 1U;
    if (k) base = detail::add_unchecked(e, base, base);
  }
  return acc;
}

/// Polynomial in x, ascending coefficients over F.
template <class F>
using XPoly = std::vector<F>;

template <class F>
F eval_xpoly(const XPoly<F>& f, const F& x) {
  F acc(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Division polynomials in x alone:
///   n = 2: x^3 + Ax + B        (psi_2^2 / 4)
///   n = 3: 3x^4 + 6Ax^2 + 12Bx - A^2
///   n = 4: psi_4 / psi_2 = 2x^6 + 10Ax^4 + 40Bx^3 - 10A^2x^2 - 8ABx - 2A^3 - 16B^2
template <class F>
XPoly<F> division_polynomial(const WeierstrassCurve<F>& e, int n) {
  const F& A = e.A;
  const F& B = e.B;
  switch (n) {
    case 2:
      return {B, A, F(0), F(1)};
    case 3:
      return {-(A * A), F(12) * B, F(6) * A, F(0), F(3)};
    case 4:
      return {F(-2) * A * A * A - F(16) * B * B, F(-8) * A * B, F(-10) * A * A, F(40) * B, F(10) * A, F(0), F(2)};
    default:
      throw InvalidInput("division polynomials are provided for n = 2, 3, 4 only");
  }
}

/// Order of P when it is torsion (n*P = O for some n <= 12), else nullopt.
std::optional<int> is_torsion_over_Q(const WeierstrassCurve<Rational>& e, const CurvePoint<Rational>& p);

/// y^2 = alpha x^4 + beta with alpha + beta = gamma^2.
template <class F>
struct QuarticCurve {
  F alpha;
  F beta;
  F gamma;

  QuarticCurve(F a, F b, F g) : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)) {
    if (!(alpha + beta == gamma * gamma)) throw InvalidInput("quartic needs alpha + beta = gamma^2");
    if (is_zero(alpha) || is_zero(beta)) throw Degenerate("quartic with alpha * beta = 0");
  }
  bool contains(const F& x, const F& y) const { return y * y == alpha * x * x * x * x + beta; }
};

template <class F>
struct QuarticPoint {
  F x;
  F y;
  friend bool operator==(const QuarticPoint& p, const QuarticPoint& q) { return p.x == q.x && p.y == q.y; }
};

/// Group law on a quartic v^2 = aU^4 + bU^3 + cU^2 + dU + q^2 (q != 0)
/// with origin (0, q), via the classical map to a long Weierstrass model
/// (origin goes to infinity) and then completion to short form. Affine
/// quartic points map to affine cubic points or infinity; cubic points
/// coming from the quartic's points at infinity raise Degenerate.
template <class F>
class QuarticGroup {
 public:
  /// Curve y^2 = alpha x^4 + beta with origin (x0, y0) on it.
  QuarticGroup(const QuarticCurve<F>& c, const QuarticPoint<F>& origin)
      : x0_(origin.x), q_(origin.y), curve_(make_curve(c, origin)) {}

  /// Quartic v^2 = aU^4 + bU^3 + cU^2 + dU + q^2 with origin (0, q).
  static QuarticGroup general(F a, F b, F c, F d, F q) {
    if (is_zero(q)) throw Degenerate("origin with v = 0 (branch point) cannot anchor the map");
    return QuarticGroup(std::move(a), std::move(b), std::move(c), std::move(d), std::move(q));
  }

  const WeierstrassCurve<F>& cubic() const { return curve_; }

  CurvePoint<F> to_cubic(const QuarticPoint<F>& p) const {
    F u = p.x - x0_;
    const F& v = p.y;
    if (!(v * v == quartic_at(u))) throw InvalidInput("point not on the quartic");
    if (is_zero(u)) {
      if (v == q_) return CurvePoint<F>::infinity();
      // (0, -q) goes to X = -a2, Y = a1 a2 - a3.
      F X = -a2_;
      return to_short(X, a1_ * a2_ - a3_);
    }
    F X = (F(2) * q_ * (v + q_) + d_ * u) / (u * u);
    F Y = (F(4) * q_ * q_ * (v + q_) + F(2) * q_ * (d_ * u + c_ * u * u) - d_ * d_ * u * u / (F(2) * q_)) /
          (u * u * u);
    return to_short(X, Y);
  }

  QuarticPoint<F> from_cubic(const CurvePoint<F>& p) const {
    if (p.infinite) return {x0_, q_};
    F X = p.x - b2_ / F(12);
    F Y = p.y - (a1_ * X + a3_) / F(2);
    if (is_zero(Y)) throw Degenerate("cubic point with Y = 0 lies over a point at infinity of the quartic");
    F u = (F(2) * q_ * (X + c_) - d_ * d_ / (F(2) * q_)) / Y;
    F v = -q_ + u * (u * X - d_) / (F(2) * q_);
    return {u + x0_, v};
  }

  QuarticPoint<F> add(const QuarticPoint<F>& p, const QuarticPoint<F>& q) const {
    return from_cubic(detail::add_unchecked(curve_, to_cubic(p), to_cubic(q)));
  }

  QuarticPoint<F> multiply(const QuarticPoint<F>& p, long m) const {
    return from_cubic(ec_multiply(curve_, to_cubic(p), m));
  }

 private:
  QuarticGroup(F a, F b, F c, F d, F q)
      : x0_(0), q_(std::move(q)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)),
        curve_(complete()) {}

  F quartic_at(const F& u) const { return (((a_ * u + b_) * u + c_) * u + d_) * u + q_ * q_; }

  CurvePoint<F> to_short(const F& X, const F& Y) const {
    return CurvePoint<F>::affine(X + b2_ / F(12), Y + (a1_ * X + a3_) / F(2));
  }

  WeierstrassCurve<F> make_curve(const QuarticCurve<F>& c, const QuarticPoint<F>& o) {
    if (!c.contains(o.x, o.y)) throw InvalidInput("origin not on the quartic");
    if (is_zero(o.y)) throw Degenerate("origin with y = 0 (branch point) cannot anchor the map");
    // alpha (x0 + u)^4 + beta expanded in u.
    const F& al = c.alpha;
    F x2 = x0_ * x0_;
    a_ = al;
    b_ = F(4) * al * x0_;
    c_ = F(6) * al * x2;
    d_ = F(4) * al * x2 * x0_;
    return complete();
  }

  WeierstrassCurve<F> complete() {
    a1_ = d_ / q_;
    a2_ = c_ - d_ * d_ / (F(4) * q_ * q_);
    a3_ = F(2) * q_ * b_;
    F a4 = F(-4) * q_ * q_ * a_;
    F a6 = a2_ * a4;
    b2_ = a1_ * a1_ + F(4) * a2_;
    F b4 = F(2) * a4 + a1_ * a3_;
    F b6 = a3_ * a3_ + F(4) * a6;
    F A = b4 / F(2) - b2_ * b2_ / F(48);
    F B = b6 / F(4) - b2_ * b4 / F(24) + b2_ * b2_ * b2_ / F(864);
    return WeierstrassCurve<F>(A, B);
  }

  F x0_, q_;
  F a_, b_, c_, d_;
  F a1_, a2_, a3_, b2_;
  WeierstrassCurve<F> curve_;
};

/// Projective points on the diagonal plane cubic alpha X^3 + beta Y^3 + gamma Z^3 = 0
/// with coordinates in an integral domain R; `normalize` rescales a triple to
/// a canonical projective representative.
template <class R>
using Triple = std::array<R, 3>;

template <class R, class Normalize>
class DiagonalCubic {
 public:
  DiagonalCubic(R alpha, R beta, R gamma, Normalize normalize)
      : c_{std::move(alpha), std::move(beta), std::move(gamma)}, norm_(normalize) {}

  R value(const Triple<R>& p) const {
    return c_[0] * p[0] * p[0] * p[0] + c_[1] * p[1] * p[1] * p[1] + c_[2] * p[2] * p[2] * p[2];
  }
  bool contains(const Triple<R>& p) const {
    return !(is_zero(p[0]) && is_zero(p[1]) && is_zero(p[2])) && is_zero(value(p));
  }

  static bool same_point(const Triple<R>& p, const Triple<R>& q) {
    return is_zero(p[0] * q[1] - p[1] * q[0]) && is_zero(p[0] * q[2] - p[2] * q[0]) &&
           is_zero(p[1] * q[2] - p[2] * q[1]);
  }

  /// Third intersection of the line through p and q (tangent when p = q).
  Triple<R> third(const Triple<R>& p, const Triple<R>& q) const {
    Triple<R> out;
    if (same_point(p, q)) {
      R x3 = c_[0] * p[0] * p[0] * p[0];
      R y3 = c_[1] * p[1] * p[1] * p[1];
      R z3 = c_[2] * p[2] * p[2] * p[2];
      out = {p[0] * (y3 - z3), p[1] * (z3 - x3), p[2] * (x3 - y3)};
      if (all_zero(out)) return norm_(p);  // flex
    } else {
      R d1 = polar(p, q);
      R d2 = polar(q, p);
      out = {d2 * p[0] - d1 * q[0], d2 * p[1] - d1 * q[1], d2 * p[2] - d1 * q[2]};
      if (all_zero(out)) throw Degenerate("line meets the cubic in a component");
    }
    return norm_(out);
  }

  /// Group law with origin o: p + q = o * (p * q).
  Triple<R> add(const Triple<R>& o, const Triple<R>& p, const Triple<R>& q) const {
    return third(o, third(p, q));
  }

  Triple<R> multiply(const Triple<R>& o, const Triple<R>& p, int m) const {
    if (m < 0) throw InvalidInput("negative multiplier");
    Triple<R> acc = norm_(o);
    for (int k = 0; k < m; ++k) acc = add(o, acc, p);
    return acc;
  }

 private:
  static bool all_zero(const Triple<R>& p) { return is_zero(p[0]) && is_zero(p[1]) && is_zero(p[2]); }
  // grad F(p) . q
  R polar(const Triple<R>& p, const Triple<R>& q) const {
    return R(3) * (c_[0] * p[0] * p[0] * q[0] + c_[1] * p[1] * p[1] * q[1] + c_[2] * p[2] * p[2] * q[2]);
  }

  Triple<R> c_;
  Normalize norm_;
};

}  // namespace diag
