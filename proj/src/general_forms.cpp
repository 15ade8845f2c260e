#include "diag/general_forms.hpp"

#include <sstream>

namespace diag {

Form::Form(std::size_t variables, std::vector<Term> terms) : n_(variables) {
  if (n_ == 0) throw InvalidInput("form in zero variables");
  bool first = true;
  for (auto& [e, c] : terms) {
    if (e.size() != n_) throw InvalidInput("exponent vector of the wrong length");
    int d = 0;
    for (int x : e) {
      if (x < 0) throw InvalidInput("negative exponent");
      d += x;
    }
    if (c == 0) continue;
    if (first) degree_ = d;
    else if (d != degree_) throw InvalidInput("form is not homogeneous");
    first = false;
    terms_.emplace_back(std::move(e), c);
  }
  if (terms_.empty()) throw InvalidInput("zero form");
}

Form Form::monomial(Rational c, std::vector<int> exponents) {
  auto n = exponents.size();
  return Form(n, {{std::move(exponents), std::move(c)}});
}

Form Form::linear(std::span<const Rational> c) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<int> e(c.size(), 0);
    e[i] = 1;
    terms.emplace_back(std::move(e), c[i]);
  }
  return Form(c.size(), std::move(terms));
}

Rational Form::operator()(std::span<const Rational> x) const {
  if (x.size() != n_) throw InvalidInput("evaluation point of the wrong length");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i]) m *= power(x[i], static_cast<unsigned long>(e[i]));
    }
    sum += m;
  }
  return sum;
}

Form read_form(std::istream& in) {
  std::vector<Form::Term> terms;
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw InvalidInput("form line without ':': " + line);
    Rational c = parse_rational(line.substr(0, colon));
    std::istringstream es(line.substr(colon + 1));
    std::vector<int> e;
    std::string tok;
    while (es >> tok) e.push_back(static_cast<int>(parse_integer(tok).get_si()));
    if (n == 0) n = e.size();
    terms.emplace_back(std::move(e), c);
  }
  if (terms.empty()) throw InvalidInput("empty form");
  return Form(n, std::move(terms));
}

Form parse_form(const std::string& text) {
  std::istringstream in(text);
  return read_form(in);
}

std::string to_string(const Form& f) {
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    out += to_string(c) + " :";
    for (int x : e) out += " " + std::to_string(x);
    out += "\n";
  }
  return out;
}

FormProduct::FormProduct(std::vector<std::pair<Form, int>> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidInput("empty form product");
  for (const auto& [f, e] : factors_) {
    if (e < 0) throw InvalidInput("negative exponent in form product");
    if (f.variables() != variables()) throw InvalidInput("form product mixes variable counts");
  }
}

int FormProduct::degree() const {
  int d = 0;
  for (const auto& [f, e] : factors_) d += e * f.degree();
  return d;
}

Rational FormProduct::operator()(std::span<const Rational> x) const {
  Rational out = 1;
  for (const auto& [f, e] : factors_) out *= power(f(x), static_cast<unsigned long>(e));
  return out;
}

QuarticGroup<Rational> quartic_c_ab(const Rational& a, const Rational& b, const Rational& s) {
  if (a == 0 || b == 0) throw InvalidInput("a and b must be nonzero");
  if (s == 0) throw Degenerate("t = s^2 = 0");
  Rational t = s * s;
  // (btU^2 + 2aU + at)(bU^2 + 2btU + a)
  auto g = QuarticGroup<Rational>::general(b * b * t, 2 * b * b * t * t + 2 * a * b, 6 * a * b * t,
                                           2 * a * a + 2 * a * b * t * t, a * s);
  auto e = curve_e_ab(a, b, s);
  if (g.cubic().A != e.A || g.cubic().B != e.B) {
    throw Error("Weierstrass model of C_{a,b} differs from E_{a,b}");
  }
  return g;
}

WeierstrassCurve<Rational> curve_e_ab(const Rational& a, const Rational& b, const Rational& s) {
  Rational s4 = power(s, 4);
  Rational c = a - b * s4;
  return WeierstrassCurve<Rational>(4 * a * b * c * c, Rational(0));
}

CurvePoint<Rational> point_q(const Rational& a, const Rational& b, const Rational& s) {
  Rational s4 = power(s, 4);
  Rational den = a + b * s4;
  if (s == 0 || den == 0) throw Degenerate("Q has a pole (s = 0 or a + b s^4 = 0)");
  Rational n1 = a * a - 6 * a * b * s4 + b * b * s4 * s4;
  Rational n2 = power(a, 4) + 20 * power(a, 3) * b * s4 - 26 * a * a * b * b * power(s4, 2) +
                20 * a * power(b, 3) * power(s4, 3) + power(b, 4) * power(s4, 4);
  Rational X = n1 * n1 / (4 * s * s * den * den);
  Rational Y = n1 * n2 / (8 * power(s, 3) * power(den, 3));
  return CurvePoint<Rational>::affine(X, Y);
}

Thm6Point thm6_point(const Thm6Context& ctx, long k) {
  if (k < 1) throw InvalidInput("k must be positive");
  const auto& [a, b, f1, f2, u, s] = ctx;
  if (f1.degree() != f2.degree() || f1.degree() % 2 == 0) {
    throw InvalidInput("f1 and f2 need the same odd degree");
  }
  if (u.size() != f1.variables() || u.size() != f2.variables()) throw InvalidInput("u has the wrong length");
  const long m = (f1.degree() - 1) / 2;
  Rational F1 = f1(u), F2 = f2(u);
  if (F1 == 0) throw Degenerate("f1(u) = 0");
  Rational t = -F2 / F1;
  if (t != s * s) throw InvalidInput("-f2(u)/f1(u) is not s^2");

  auto group = quartic_c_ab(a, b, s);
  auto e = group.cubic();
  auto q = point_q(a, b, s);
  if (!e.contains(q)) throw Error("Q is not on E_{a,b}");
  auto kq = ec_multiply(e, q, k);
  if (kq.infinite) throw Degenerate("degenerate multiple: kQ is the point at infinity");
  auto uv = group.from_cubic(kq);

  Thm6Point out;
  out.k = k;
  out.U = uv.x;
  out.V = uv.y;
  Rational vden = b * F1 * out.U * out.U - 2 * b * F2 * out.U + a * F1;
  if (vden == 0) throw Degenerate("v has a pole at this U");
  out.v = out.V * F1 / vden;
  Rational tden = a * F1 - b * F2 * out.U;
  if (tden == 0) throw Degenerate("base locus: a f1 - b f2 U = 0");
  out.T = (a - b * out.U * out.v * out.v) / tden;
  if (out.T == 0) throw Degenerate("T = 0 gives the zero point");
  Rational Tm = power(out.T, static_cast<unsigned long>(m));
  out.y1 = Tm;
  out.y2 = out.v * Tm;
  for (const auto& ui : u) out.X.push_back(ui * out.T);
  if (!on_v(ctx, out)) throw Error("pipeline point misses V");
  return out;
}

bool on_v(const Thm6Context& ctx, const Thm6Point& p) {
  Rational g1 = ctx.f1(p.X), g2 = ctx.f2(p.X);
  return ctx.a * (power(p.y1, 4) - g1 * g1) == ctx.b * (power(p.y2, 4) - g2 * g2);
}

Cor62Result cor62_parametrize(const Rational& a, const Rational& b, std::span<const Rational> l1,
                              std::span<const Rational> l2, const Form& F1, const Form& F2,
                              std::span<const Rational> free, long k) {
  const std::size_t n = l1.size();
  if (n < 2 || l2.size() != n) throw InvalidInput("linear forms need equal length >= 2");
  if (free.size() != n) throw InvalidInput("need U1, U2 and n - 2 free coordinates");
  std::size_t pi = n, pj = n;
  for (std::size_t i = 0; i < n && pi == n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (l1[i] * l2[j] - l1[j] * l2[i] != 0) {
        pi = i;
        pj = j;
        break;
      }
    }
  }
  if (pi == n) throw InvalidInput("L1 and L2 are dependent");
  const Rational& U1 = free[0];
  const Rational& U2 = free[1];
  std::vector<Rational> x(n, Rational(0));
  Rational r1 = U1 * U1, r2 = -U2 * U2;
  for (std::size_t i = 0, f = 2; i < n; ++i) {
    if (i == pi || i == pj) continue;
    x[i] = free[f++];
    r1 -= l1[i] * x[i];
    r2 -= l2[i] * x[i];
  }
  Rational det = l1[pi] * l2[pj] - l1[pj] * l2[pi];
  x[pi] = (r1 * l2[pj] - r2 * l1[pj]) / det;
  x[pj] = (l1[pi] * r2 - l2[pi] * r1) / det;

  Form L1 = Form::linear(l1), L2 = Form::linear(l2);
  Rational g1 = F1(x), g2 = F2(x);
  if (U1 * g1 == 0) throw Degenerate("f1(u) = 0 (U1 F1 = 0)");
  Cor62Result out;
  out.u = x;
  out.s = U2 * g2 / (U1 * g1);
  out.Y = U1 * U2 * g1 * g2;
  Thm6Context ctx{a, b, FormProduct({{L1, 1}, {F1, 2}}), FormProduct({{L2, 1}, {F2, 2}}), x, out.s};
  if (out.Y * out.Y != -ctx.f1(x) * ctx.f2(x)) throw Error("H point check failed");
  out.point = thm6_point(ctx, k);
  return out;
}

Rational del_pezzo_residual(const Rational& a, const Rational& b, const SurfacePoint& p) {
  return a * (power(p.p, 4) - 1) - b * (power(p.q, 4) - p.r * p.r);
}

SurfacePoint unirational_map(const Rational& a, const Rational& b, const Rational& u, const Rational& v) {
  Rational u2 = u * u;
  Rational den = b * u2 * (u2 - 2 * v * v) + a;
  if (den == 0) throw Degenerate("b u^2 (u^2 - 2v^2) + a = 0");
  SurfacePoint out;
  out.p = (b * u2 * (u2 - 4 * u * v + 2 * v * v) + a) / den;
  out.q = (b * u2 * (u2 * u - 2 * u2 * v + 2 * u * v * v) + a * (u - 2 * v)) / den;
  out.r = u2 * (out.p * out.p + 1) - out.q * out.q;
  Rational res = del_pezzo_residual(a, b, out);
  if (res != 0) throw Error("unirational map misses a(p^4-1) = b(q^4-r^2); residual " + to_string(res));
  return out;
}

WPoint thm63_lift(const Rational& a, const Rational& b, const Form& f1, const Form& f2,
                  std::span<const Rational> w, const SurfacePoint& pqr) {
  const int m = f1.degree();
  if (f2.degree() != 2 * m + 1) throw InvalidInput("need deg f2 = 2 deg f1 + 1");
  const std::size_t n = f1.variables();
  if (f2.variables() != n || w.size() + 1 != n) throw InvalidInput("w must have n - 1 entries");
  std::vector<Rational> one_w{Rational(1)};
  one_w.insert(one_w.end(), w.begin(), w.end());
  Rational g1 = f1(one_w), g2 = f2(one_w);
  if (g2 == 0) throw Degenerate("f2(1, w) = 0");
  Rational x1 = g1 * g1 / g2 * pqr.r;
  if (x1 == 0) throw Degenerate("x1 = 0 gives the cone vertex");
  WPoint out;
  out.X.push_back(x1);
  for (const auto& wi : w) out.X.push_back(wi * x1);
  Rational xm = power(x1, static_cast<unsigned long>(m));
  out.y1 = pqr.p * g1 * xm;
  out.y2 = pqr.q * g1 * xm;
  Rational h1 = f1(out.X), h2 = f2(out.X);
  if (a * (power(out.y1, 4) - power(h1, 4)) != b * (power(out.y2, 4) - h2 * h2)) {
    throw Error("lifted point misses W");
  }
  return out;
}

}  // namespace diag
