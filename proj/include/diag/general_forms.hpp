#pragma once

// Points on a(y1^4 - f1^2) = b(y2^4 - f2^2) from the quartic C_{a,b} and
// its Weierstrass model, and the unirational map onto a(p^4-1) = b(q^4-r^2).

#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diag/elliptic.hpp"

namespace diag {

/// Homogeneous form in n variables, stored as (exponents, coefficient) terms.
class Form {
 public:
  using Term = std::pair<std::vector<int>, Rational>;

  Form(std::size_t variables, std::vector<Term> terms);
  /// Single monomial with coefficient c.
  static Form monomial(Rational c, std::vector<int> exponents);
  /// Linear form sum c_i X_i.
  static Form linear(std::span<const Rational> c);

  std::size_t variables() const { return n_; }
  int degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  Rational operator()(std::span<const Rational> x) const;

 private:
  std::size_t n_;
  int degree_ = 0;
  std::vector<Term> terms_;
};

/// Lines "coefficient : e1 e2 ... en"; '#' starts a comment.
Form read_form(std::istream& in);
Form parse_form(const std::string& text);
std::string to_string(const Form& f);

/// Product of powers of forms, evaluated factor by factor.
class FormProduct {
 public:
  FormProduct(const Form& f) : factors_{{f, 1}} {}  // NOLINT(google-explicit-constructor)
  explicit FormProduct(std::vector<std::pair<Form, int>> factors);
  int degree() const;
  std::size_t variables() const { return factors_.front().first.variables(); }
  Rational operator()(std::span<const Rational> x) const;

 private:
  std::vector<std::pair<Form, int>> factors_;
};

struct Thm6Context {
  Rational a, b;
  FormProduct f1, f2;        // equal odd degree 2m + 1
  std::vector<Rational> u;   // the point u-bar
  Rational s;                // square witness: -f2(u)/f1(u) = s^2
};

struct Thm6Point {
  long k;
  Rational U, V, v, T;
  Rational y1, y2;
  std::vector<Rational> X;
};

/// C_{a,b} as a quartic in U with origin (0, a s); the Weierstrass model it
/// produces is checked against Y^2 = X^3 + 4ab(a - b s^4)^2 X.
QuarticGroup<Rational> quartic_c_ab(const Rational& a, const Rational& b, const Rational& s);
WeierstrassCurve<Rational> curve_e_ab(const Rational& a, const Rational& b, const Rational& s);
/// The printed point Q on E_{a,b}; needs s != 0 and a + b s^4 != 0.
CurvePoint<Rational> point_q(const Rational& a, const Rational& b, const Rational& s);

/// kQ pulled back to V. Throws Degenerate("base locus") when a f1 - b f2 U = 0
/// and Degenerate("degenerate multiple") when kQ is the point at infinity.
Thm6Point thm6_point(const Thm6Context& ctx, long k);
bool on_v(const Thm6Context& ctx, const Thm6Point& p);

struct Cor62Result {
  std::vector<Rational> u;
  Rational s;
  Rational Y;  // Y^2 = -f1(u) f2(u)
  Thm6Point point;
};

/// f_i = L_i F_i^2. `free` holds U1, U2 and then the n - 2 coordinates other
/// than the two solved for.
Cor62Result cor62_parametrize(const Rational& a, const Rational& b, std::span<const Rational> l1,
                              std::span<const Rational> l2, const Form& F1, const Form& F2,
                              std::span<const Rational> free, long k = 1);

struct SurfacePoint {
  Rational p, q, r;
};
/// (g1, g2, g3)(u, v); throws Degenerate when b u^2(u^2 - 2v^2) + a = 0 and
/// Error with the residual if the image misses a(p^4 - 1) = b(q^4 - r^2).
SurfacePoint unirational_map(const Rational& a, const Rational& b, const Rational& u, const Rational& v);
Rational del_pezzo_residual(const Rational& a, const Rational& b, const SurfacePoint& p);

struct WPoint {
  Rational y1, y2;
  std::vector<Rational> X;
};
/// Cone point over (p, q, r) for deg f2 = 2 deg f1 + 1; w = (w_2..w_n).
WPoint thm63_lift(const Rational& a, const Rational& b, const Form& f1, const Form& f2,
                  std::span<const Rational> w, const SurfacePoint& pqr);

}  // namespace diag
