#pragma once

#include <string>

#include "diag/poly.hpp"

namespace diag {

/// Element of Q(t) in canonical form: gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(long c) : num_(Rational(c)), den_(1) {}  // NOLINT
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc& operator+=(const RatFunc& g);
  RatFunc& operator-=(const RatFunc& g);
  RatFunc& operator*=(const RatFunc& g);
  RatFunc& operator/=(const RatFunc& g);
  friend RatFunc operator+(RatFunc f, const RatFunc& g) { return f += g; }
  friend RatFunc operator-(RatFunc f, const RatFunc& g) { return f -= g; }
  friend RatFunc operator*(RatFunc f, const RatFunc& g) { return f *= g; }
  friend RatFunc operator/(RatFunc f, const RatFunc& g) { return f /= g; }
  RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }
  friend bool operator==(const RatFunc& f, const RatFunc& g) {
    return f.num_ == g.num_ && f.den_ == g.den_;
  }

  /// Value at t0; throws Degenerate when t0 is a pole.
  Rational eval(const Rational& t0) const;
  RatFunc pow(unsigned e) const;

 private:
  struct Canonical {};
  RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  Poly num_;
  Poly den_;
};

std::string to_string(const RatFunc& f);

/// Field traits so the curve code can run over Q and over Q(t) unchanged.
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

}  // namespace diag
