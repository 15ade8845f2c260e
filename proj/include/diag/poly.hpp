#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diag/rational.hpp"

namespace diag {

/// Dense univariate polynomial over Q in the indeterminate t, coefficients in
/// ascending degree. The zero polynomial has no coefficients and degree -1;
/// otherwise the leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);  // NOLINT: constants promote implicitly
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, int degree);
  /// The indeterminate t.
  static Poly t() { return monomial(1, 1); }
  static Poly from_ints(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i (zero outside the stored range).
  Rational coeff(int i) const;
  const Rational& leading() const;

  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Poly& g);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator*(Poly f, const Rational& c) { return f *= c; }
  friend Poly operator*(const Rational& c, Poly f) { return f *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& f, const Poly& g) { return f.coeffs_ == g.coeffs_; }

  Rational eval(const Rational& t0) const;
  Poly derivative() const;
  /// f(g(t)).
  Poly compose(const Poly& g) const;
  Poly pow(unsigned e) const;
  Poly monic() const;
  /// Multiplies by t^k for k >= 0.
  Poly shift(int k) const;
  /// Largest k with t^k | f (0 for the zero polynomial).
  int t_valuation() const;

  bool has_integer_coeffs() const;
  /// Least common multiple of coefficient denominators (1 for zero).
  Integer denominator_lcm() const;
  /// gcd of numerators for an integer polynomial (0 for zero).
  Integer integer_content() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder with deg r < deg g. Throws InvalidInput for g = 0.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
/// f / g when the division is exact, otherwise throws Error.
Poly exact_div(const Poly& f, const Poly& g);
bool divides(const Poly& g, const Poly& f);

/// Monic greatest common divisor in Q[t]; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& f, const Poly& g);
Poly poly_gcd(std::span<const Poly> fs);
Poly poly_lcm(const Poly& f, const Poly& g);

/// Square-free part (product of distinct monic irreducible factors).
Poly squarefree_part(const Poly& f);
/// Yun decomposition: result[i] is the monic product of the irreducible
/// factors of multiplicity i + 1.
std::vector<Poly> squarefree_decomposition(const Poly& f);
/// True when f = c * g^k with c a rational k-th power and g in Q[t].
bool is_perfect_power(const Poly& f, unsigned k);

/// Distinct rational roots of a nonzero f, ascending. Uses p-adic lifting
/// of roots modulo a small prime and rational reconstruction, so no integer
/// factorization of the coefficients is needed.
std::vector<Rational> rational_roots(const Poly& f);

/// Ascending coefficient array text, e.g. 3t^6+1 -> [1,0,0,0,0,0,3].
std::string to_string(const Poly& f);
/// Human-readable form such as "3*t^6 + 1".
std::string to_pretty(const Poly& f, const std::string& var = "t");
Poly parse_poly(std::string_view text);

}  // namespace diag
