#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "diag/cone.hpp"
#include "diag/general_forms.hpp"
#include "diag/pencils.hpp"
#include "diag/quartic_surface.hpp"
#include "diag/report.hpp"
#include "diag/search.hpp"
#include "diag/serialize.hpp"

using nlohmann::json;
using namespace diag;

namespace {

constexpr int kUsage = 2;

json jr(const Rational& r) { return json::parse(rational_to_json(r)); }
json jp(const Poly& f) { return json::parse(poly_to_json(f)); }

void emit(const json& j) { std::cout << j.dump() << '\n'; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Coeffs4 coeffs4(const std::string& text) {
  auto v = parse_rational_list(text);
  if (v.size() != 4) throw InvalidInput("--abcd needs four integers");
  Coeffs4 out{};
  for (int i = 0; i < 4; ++i) {
    if (v[i].get_den() != 1 || !v[i].get_num().fits_slong_p() || v[i] == 0) {
      throw InvalidInput("--abcd needs four nonzero machine integers");
    }
    out[i] = v[i].get_num().get_si();
  }
  return out;
}

json gcd_json(const ParametricSolution& s) {
  auto g = solution_gcd(s);
  auto d = degrees(s);
  return {{"degrees", d},
          {"gcd", jp(g.gcd)},
          {"content", to_string(g.content)},
          {"weighted_content", to_string(g.weighted_content)},
          {"coprime", g.coprime()}};
}

// ---- generate / verify ----

struct GenerateArgs {
  std::string family, a = "1", b = "1", out;
  long m = 1;
};

int run_generate(const GenerateArgs& g) {
  auto sol = generate(g.family, parse_rational(g.a), parse_rational(g.b), g.m);
  std::string text = solution_to_json(sol);
  if (g.out.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream f(g.out);
    if (!f) throw InvalidInput("cannot write '" + g.out + "'");
    f << text << '\n';
  }
  bool ok = verify_identity(sol);
  json j = {{"family", g.family}, {"m", g.m}, {"verified", ok}, {"trivial", is_trivial(sol)}};
  j.update(gcd_json(sol));
  (g.out.empty() ? std::cerr : std::cout) << j.dump() << '\n';
  return ok ? 0 : 1;
}

int run_verify(const std::string& path) {
  auto text = slurp(path);
  bool blank = text.find_first_not_of(" \t\r\n") == std::string::npos;
  if (blank) throw InvalidInput("empty solution file");
  auto sol = solution_from_json(text);
  bool ok = verify_identity(sol);
  bool trivial = is_trivial(sol);
  json j = {{"equation", sol.equation.name()}, {"verified", ok}, {"trivial", trivial}};
  if (!ok) j["residual"] = jp(identity_residual(sol));
  j.update(gcd_json(sol));
  emit(j);
  return ok && !trivial ? 0 : 1;
}

// ---- cone / surface ----

int run_cone(const std::string& path, bool min_form) {
  auto cone = parse_cone(slurp(path));
  auto rays = extremal_rays(cone);
  for (const auto& r : rays) {
    std::vector<std::string> v;
    for (const auto& x : r) v.push_back(to_string(x));
    emit({{"ray", v}});
  }
  json j = {{"rays", rays.size()}, {"dimension", cone.dimension()}};
  if (min_form) {
    auto m = min_self_intersection(cone);
    j["min_self_intersection"] = to_string(m.value);
    j["at"] = to_string(m.ray);
  }
  emit(j);
  return 0;
}

int run_surface_class(const std::vector<long>& n) {
  if (n.size() != 6) throw InvalidInput("--class needs six integers");
  DivisorClass d{};
  std::copy(n.begin(), n.end(), d.begin());
  auto gd = genus_and_degree(d);
  emit({{"self_intersection", pairing(d, d)}, {"genus", gd.genus}, {"degree", gd.degree}, {"five_squares", five_squares(d)}});
  return 0;
}

int run_surface_h4(int which) {
  if (which != 3 && which != 7) throw InvalidInput("--degree must be 3 or 7");
  auto s = h4_parametrization(which == 3 ? H4Curve::degree3 : H4Curve::degree7);
  bool ok = verify_h4_parametrization(which == 3 ? H4Curve::degree3 : H4Curve::degree7);
  emit({{"x", jp(s.x)}, {"y", jp(s.y)}, {"z", jp(s.z)}, {"w", jp(s.w)}, {"h", jr(s.h)}, {"verified", ok}});
  return ok ? 0 : 1;
}

// ---- forms ----

struct FormsArgs {
  std::string a = "1", b = "1", u, v, t, f1, f2, point;
  long k = 1;
};

int run_forms_q(const FormsArgs& f) {
  Rational a = parse_rational(f.a), b = parse_rational(f.b), s = parse_rational(f.t);
  auto e = curve_e_ab(a, b, s);
  auto q = point_q(a, b, s);
  bool on = e.contains(q);
  emit({{"A", jr(e.A)}, {"B", jr(e.B)}, {"X", jr(q.x)}, {"Y", jr(q.y)}, {"on_curve", on}});
  return on ? 0 : 1;
}

int run_forms_map(const FormsArgs& f) {
  Rational a = parse_rational(f.a), b = parse_rational(f.b);
  auto p = unirational_map(a, b, parse_rational(f.u), parse_rational(f.v));
  Rational res = del_pezzo_residual(a, b, p);
  emit({{"p", jr(p.p)}, {"q", jr(p.q)}, {"r", jr(p.r)}, {"residual", jr(res)}});
  return res == 0 ? 0 : 1;
}

int run_forms_point(const FormsArgs& f) {
  Thm6Context ctx{parse_rational(f.a), parse_rational(f.b), parse_form(slurp(f.f1)), parse_form(slurp(f.f2)),
                  parse_rational_list(f.point), parse_rational(f.t)};
  auto p = thm6_point(ctx, f.k);
  json X = json::array();
  for (const auto& x : p.X) X.push_back(jr(x));
  bool ok = on_v(ctx, p);
  emit({{"k", p.k}, {"y1", jr(p.y1)}, {"y2", jr(p.y2)}, {"X", X}, {"on_V", ok}});
  return ok ? 0 : 1;
}

// ---- pencil ----

struct PencilArgs {
  std::string abcd = "1,1,2,2", exponents = "3,3,3", t, p0;
  long height = 20;
  bool example = false;
};

int run_pencil(const PencilArgs& p) {
  QuadSplit split;
  if (p.example) {
    split = example_split();
  } else {
    auto q = parse_rational_list(p.abcd);
    if (q.size() != 4) throw InvalidInput("--abcd needs four numbers");
    Quad abcd{q[0], q[1], q[2], q[3]};
    std::optional<Quad> p0;
    if (!p.p0.empty()) {
      auto v = parse_rational_list(p.p0);
      if (v.size() != 4) throw InvalidInput("--p0 needs four numbers");
      p0 = Quad{v[0], v[1], v[2], v[3]};
    }
    split = richmond_split(abcd, p0);
  }
  auto e = parse_rational_list(p.exponents);
  if (e.size() != 3) throw InvalidInput("--exponents needs three integers");
  std::array<int, 3> ex{};
  for (int i = 0; i < 3; ++i) {
    if (e[i].get_den() != 1 || e[i] < 1 || e[i] > 6) throw InvalidInput("exponents must be integers in 1..6");
    ex[i] = static_cast<int>(e[i].get_num().get_si());
  }
  auto curve = build_pencil(split, ex);
  json forms = json::array();
  for (const auto& l : split.L) {
    std::vector<std::string> row;
    for (const auto& c : l) row.push_back(to_string(c));
    forms.push_back(row);
  }
  emit({{"split", forms}, {"mu", jr(split.mu)}, {"verified", check_split(split)},
        {"A", jp(curve.abc[0])}, {"B", jp(curve.abc[1])}, {"C", jp(curve.abc[2])}});
  if (p.t.empty()) return 0;
  Rational t0 = parse_rational(p.t);
  auto found = cubic_point_search(curve, t0, p.height);
  for (const auto& pt : found.points) {
    json j = {{"y", to_string(pt[0])}, {"z", to_string(pt[1])}, {"w", to_string(pt[2])}};
    try {
      Rational x = recover_x(curve, t0, pt);
      j["x"] = jr(x);
      j["residual"] = jr(surface_residual(curve, x, pt));
    } catch (const Degenerate& err) {
      j["x"] = nullptr;
    }
    if (ex == std::array<int, 3>{3, 3, 3}) {
      auto c = curve.at(t0);
      auto ord = plane_cubic_order(c, {Rational(pt[0]), Rational(pt[1]), Rational(pt[2])});
      j["torsion_order"] = ord ? json(*ord) : json(nullptr);
    }
    emit(j);
  }
  emit({{"points", found.points.size()}, {"height", found.height}, {"degenerate", found.degenerate}});
  return 0;
}

// ---- search ----

int run_search_sextic(long max_sum) {
  auto hits = sextic_search(max_sum);
  for (const auto& h : hits) emit({{"x", h.x}, {"y", h.y}, {"z", h.z}, {"w", h.w}});
  emit({{"hits", hits.size()}, {"max_sum", max_sum}, {"symmetry", "x <= y"}});
  return 0;
}

int run_search_surface(const std::string& abcd, long height) {
  auto k = coeffs4(abcd);
  auto hits = surface_search(k, height);
  for (const auto& h : hits) emit({{"x", h.x}, {"y", h.y}, {"z", h.z}, {"w", h.w}});
  emit({{"hits", hits.size()}, {"height", height}, {"mod3_obstructed", mod3_obstruction(k)}});
  return 0;
}

int run_search_mod3(const std::string& abcd) {
  auto r = mod3_analysis(coeffs4(abcd));
  json j = {{"obstructed", r.obstructed}};
  if (!r.obstructed) j["valuations"] = r.witness;
  emit(j);
  return 0;
}

int run_search_selmer(long height, long rhs) {
  auto hits = selmer_check(height, rhs);
  for (const auto& h : hits) emit({{"z", h.x}, {"y", h.y}, {"w", h.z}});
  emit({{"hits", hits.size()}, {"height", height}, {"rhs", rhs}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions and checks for a(x^p - y^q) = b(z^r - w^s)"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Build a parametric solution and write it as JSON");
  generate_cmd->add_option("--family", gen.family, "2666, 2488, 2848, 24612, 26412, 21246 or cor2")->required();
  generate_cmd->add_option("--a", gen.a, "coefficient a");
  generate_cmd->add_option("--b", gen.b, "coefficient b");
  generate_cmd->add_option("--m", gen.m,
                           "multiple index; m = 2 gives the 2Q displays of the quartic and sextic families, "
                           "for cor2 it is n");
  generate_cmd->add_option("--out", gen.out, "solution file (stdout when omitted)");

  std::string verify_file;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution file");
  verify_cmd->add_option("file", verify_file)->required();

  std::string cone_file, cone_form;
  auto* cone_cmd = app.add_subcommand("cone", "Extremal rays of {n : c.n >= 0}");
  cone_cmd->add_option("--input,--file", cone_file, "one constraint row per line")->required();
  cone_cmd->add_option("--form", cone_form, "table1: minimize (D.D) over the rays (dimension 6)")
      ->check(CLI::IsMember({"table1"}));

  std::vector<long> divisor;
  int h4_degree = 0;
  auto* surface_cmd = app.add_subcommand("surface", "Lattice and h = 4 curves on x^4 - y^4 = h(z^4 - w^4)");
  auto* class_opt = surface_cmd->add_option("--class", divisor, "n1..n6")->delimiter(',');
  auto* h4_opt = surface_cmd->add_option("--degree", h4_degree, "3 or 7");
  class_opt->excludes(h4_opt);

  FormsArgs forms;
  auto* forms_cmd = app.add_subcommand("forms", "Points on a(y1^4 - f1^2) = b(y2^4 - f2^2) and W'");
  forms_cmd->require_subcommand(1);
  auto* q_cmd = forms_cmd->add_subcommand("q", "The point Q on E_{a,b}");
  auto* map_cmd = forms_cmd->add_subcommand("map", "Unirational map onto a(p^4 - 1) = b(q^4 - r^2)");
  auto* point_cmd = forms_cmd->add_subcommand("point", "kQ pulled back to V");
  for (auto* c : {q_cmd, map_cmd, point_cmd}) {
    c->add_option("--a", forms.a);
    c->add_option("--b", forms.b);
  }
  q_cmd->add_option("--t", forms.t, "the parameter s with t(u) = s^2")->required();
  map_cmd->add_option("--u", forms.u)->required();
  map_cmd->add_option("--v", forms.v)->required();
  point_cmd->add_option("--f1", forms.f1, "form file")->required();
  point_cmd->add_option("--f2", forms.f2, "form file")->required();
  point_cmd->add_option("--point", forms.point, "u as a comma list")->required();
  point_cmd->add_option("--s", forms.t, "square root of -f2(u)/f1(u)")->required();
  point_cmd->add_option("--k", forms.k);

  PencilArgs pen;
  auto* pencil_cmd = app.add_subcommand("pencil", "Split aX^2 + bY^2 - cZ^2 - dW^2 and search a pencil member");
  pencil_cmd->add_option("--abcd", pen.abcd);
  pencil_cmd->add_option("--p0", pen.p0, "rational point on the quadric");
  pencil_cmd->add_flag("--example", pen.example, "use the printed split of X^2 + Y^2 - 2Z^2 - 2W^2");
  pencil_cmd->add_option("--exponents", pen.exponents, "p,q,r acting on y,z,w");
  pencil_cmd->add_option("--t", pen.t, "pencil parameter");
  pencil_cmd->add_option("--height", pen.height)->check(CLI::Range(1L, 1000L));

  auto* search_cmd = app.add_subcommand("search", "Height-bounded integer searches");
  search_cmd->require_subcommand(1);
  long max_sum = 200, height = 100, rhs = 0;
  std::string abcd;
  auto* sextic_cmd = search_cmd->add_subcommand("sextic", "w^2 = z^6 - x^6 - y^6");
  sextic_cmd->add_option("--max-sum", max_sum)->check(CLI::Range(0L, 200000L));
  auto* surface_search_cmd = search_cmd->add_subcommand("surface", "ax^2 + by^6 = cz^6 + dw^6");
  surface_search_cmd->add_option("--abcd", abcd)->required();
  surface_search_cmd->add_option("--height", height)->check(CLI::Range(1L, 5000L));
  auto* mod3_cmd = search_cmd->add_subcommand("mod3", "3-adic solvability of ax^2 + by^6 = cz^6 + dw^6");
  mod3_cmd->add_option("--abcd", abcd)->required();
  auto* selmer_cmd = search_cmd->add_subcommand("selmer", "3z^3 + 4y^3 + 5w^3 = rhs");
  selmer_cmd->add_option("--height", height)->check(CLI::Range(1L, 2000L));
  selmer_cmd->add_option("--rhs", rhs);

  bool fast = false, as_json = false;
  auto* report_cmd = app.add_subcommand("report", "Run every reproduction check");
  report_cmd->add_flag("--fast", fast, "skip the cone suite and the sextic scan");
  report_cmd->add_flag("--json", as_json, "JSON lines instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*generate_cmd) return run_generate(gen);
    if (*verify_cmd) return run_verify(verify_file);
    if (*cone_cmd) return run_cone(cone_file, !cone_form.empty());
    if (*surface_cmd) {
      if (*class_opt) return run_surface_class(divisor);
      if (*h4_opt) return run_surface_h4(h4_degree);
      throw InvalidInput("surface needs --class or --degree");
    }
    if (*q_cmd) return run_forms_q(forms);
    if (*map_cmd) return run_forms_map(forms);
    if (*point_cmd) return run_forms_point(forms);
    if (*pencil_cmd) return run_pencil(pen);
    if (*sextic_cmd) return run_search_sextic(max_sum);
    if (*surface_search_cmd) return run_search_surface(abcd, height);
    if (*mod3_cmd) return run_search_mod3(abcd);
    if (*selmer_cmd) return run_search_selmer(height, rhs);
    if (*report_cmd) return run_report(std::cout, fast, as_json);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
