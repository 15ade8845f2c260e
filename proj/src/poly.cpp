#include "diag/poly.hpp"

#include <algorithm>
#include <sstream>

#include "intpoly.hpp"

namespace diag {

Poly::Poly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw InvalidInput("negative monomial degree");
  if (c == 0) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly& Poly::operator+=(const Poly& g) {
  if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& g) {
  if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly& Poly::operator*=(const Poly& g) { return *this = *this * g; }

Poly operator*(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  if (f.is_constant()) return g * f.coeffs_[0];
  if (g.is_constant()) return f * g.coeffs_[0];
  Integer df, dg;
  auto fi = detail::to_integer(f, df);
  auto gi = detail::to_integer(g, dg);
  return detail::from_integer(detail::mul(fi, gi), df * dg);
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Rational Poly::eval(const Rational& t0) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t0 + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(v));
}

Poly Poly::compose(const Poly& g) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * g + Poly(*it);
  return acc;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

Poly Poly::shift(int k) const {
  if (k < 0) throw InvalidInput("negative shift");
  if (is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + static_cast<std::size_t>(k));
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
  return Poly(std::move(v));
}

int Poly::t_valuation() const {
  int k = 0;
  while (k < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
  return is_zero() ? 0 : k;
}

bool Poly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

Integer Poly::denominator_lcm() const {
  Integer l = 1;
  for (const auto& c : coeffs_) l = ilcm(l, Integer(c.get_den()));
  return l;
}

Integer Poly::integer_content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = igcd(g, Integer(c.get_num()));
  return g;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw InvalidInput("polynomial division by zero");
  if (f.degree() < g.degree()) return {Poly(), f};
  std::vector<Rational> rem = f.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(f.degree() - g.degree()) + 1);
  const auto& gc = g.coeffs();
  Rational inv = 1 / g.leading();
  const int dg = g.degree();
  for (int k = f.degree(); k >= dg; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] * inv;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(k - dg)] = q;
    for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(k - dg + j)] -= q * gc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dg));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& f, const Poly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

bool divides(const Poly& g, const Poly& f) {
  if (g.is_zero()) return f.is_zero();
  return divmod(f, g).second.is_zero();
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Poly(1);
  Integer df, dg;
  auto fi = detail::primitive(detail::to_integer(f, df));
  auto gi = detail::primitive(detail::to_integer(g, dg));
  return detail::from_integer(detail::gcd(fi, gi)).monic();
}

Poly poly_gcd(std::span<const Poly> fs) {
  Poly g;
  for (const auto& f : fs) {
    g = poly_gcd(g, f);
    if (g.degree() == 0) break;
  }
  return g;
}

Poly poly_lcm(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  return (exact_div(f, poly_gcd(f, g)) * g).monic();
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) return {};
  if (f.is_constant()) return Poly(1);
  return exact_div(f, poly_gcd(f, f.derivative())).monic();
}

std::vector<Poly> squarefree_decomposition(const Poly& f) {
  std::vector<Poly> out;
  if (f.is_constant()) return out;
  Poly fm = f.monic();
  Poly df = fm.derivative();
  Poly a0 = poly_gcd(fm, df);
  Poly b = exact_div(fm, a0);
  Poly c = exact_div(df, a0);
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    Poly a = poly_gcd(b, d);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
    out.push_back(a);
  }
  return out;
}

bool is_perfect_power(const Poly& f, unsigned k) {
  if (k == 0) throw InvalidInput("zeroth power");
  if (f.is_zero()) return true;
  if (!exact_root(f.leading(), k)) return false;
  auto parts = squarefree_decomposition(f);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() > 0 && (i + 1) % k != 0) return false;
  }
  return true;
}

std::string to_string(const Poly& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += to_string(f.coeffs()[i]);
  }
  return out + "]";
}

std::string to_pretty(const Poly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    Rational c = f.coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << to_string(mag);
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Poly parse_poly(std::string_view text) {
  auto open = text.find('[');
  auto close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw InvalidInput("polynomial must be a bracketed coefficient list");
  }
  auto body = text.substr(open + 1, close - open - 1);
  bool blank = std::all_of(body.begin(), body.end(),
                           [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
  if (blank) return {};
  return Poly(parse_rational_list(body));
}

}  // namespace diag
