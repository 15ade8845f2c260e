#include "diag/ratfunc.hpp"

namespace diag {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Degenerate("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Rational lc = den_.leading();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& g) {
  if (den_ == g.den_) {
    num_ += g.num_;
    if (den_.degree() > 0) normalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  num_ = num_ * g.den_ + g.num_ * den_;
  den_ = den_ * g.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& g) { return *this += -g; }

RatFunc& RatFunc::operator*=(const RatFunc& g) {
  if (is_zero() || g.is_zero()) {
    *this = RatFunc();
    return *this;
  }
  if (is_polynomial() && g.is_polynomial()) {
    num_ = num_ * g.num_;
    return *this;
  }
  // Cross-cancel so the product is already reduced.
  Poly g1 = poly_gcd(num_, g.den_);
  Poly g2 = poly_gcd(g.num_, den_);
  Poly n = exact_div(num_, g1) * exact_div(g.num_, g2);
  Poly d = exact_div(den_, g2) * exact_div(g.den_, g1);
  Rational inv = 1 / d.leading();
  num_ = n * inv;
  den_ = d * inv;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& g) {
  if (g.is_zero()) throw Degenerate("division by zero in Q(t)");
  return *this *= RatFunc(g.den_, g.num_);
}

Rational RatFunc::eval(const Rational& t0) const {
  Rational d = den_.eval(t0);
  if (d == 0) throw Degenerate("evaluation at a pole t = " + to_string(t0));
  return num_.eval(t0) / d;
}

RatFunc RatFunc::pow(unsigned e) const {
  return RatFunc(num_.pow(e), den_.pow(e), Canonical{});
}

std::string to_string(const RatFunc& f) {
  if (f.is_polynomial()) return to_pretty(f.num());
  return "(" + to_pretty(f.num()) + ")/(" + to_pretty(f.den()) + ")";
}

}  // namespace diag
