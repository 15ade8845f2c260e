#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "diag/cone.hpp"
#include "diag/fibrations.hpp"
#include "diag/general_forms.hpp"
#include "diag/report.hpp"
#include "diag/search.hpp"
#include "diag/serialize.hpp"

namespace py = pybind11;
using namespace diag;

namespace {

std::vector<std::string> strings(const IntVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core of the diagonal package";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidInput>(m, "InvalidInput", error.ptr());
  py::register_exception<Degenerate>(m, "Degenerate", error.ptr());

  m.def("family_names", &family_names);
  m.def("generate_json", [](const std::string& family, const std::string& a, const std::string& b, long mult) {
    return solution_to_json(generate(family, parse_rational(a), parse_rational(b), mult));
  });
  m.def("verify_json", [](const std::string& record) {
    auto sol = solution_from_json(record);
    return verify_identity(sol);
  });

  m.def("pairing", &pairing);
  m.def("five_squares", &five_squares);
  m.def("genus_and_degree", [](const DivisorClass& d) {
    auto g = genus_and_degree(d);
    return py::make_tuple(g.genus, g.degree);
  });
  m.def("extremal_rays", [](const std::vector<std::vector<long>>& rows) {
    RationalCone cone;
    for (const auto& r : rows) cone.halfspaces.emplace_back(r.begin(), r.end());
    std::vector<std::vector<std::string>> out;
    for (const auto& ray : extremal_rays(cone)) out.push_back(strings(ray));
    return out;
  });

  m.def("point_q", [](const std::string& a, const std::string& b, const std::string& s) {
    auto q = point_q(parse_rational(a), parse_rational(b), parse_rational(s));
    return py::make_tuple(to_string(q.x), to_string(q.y));
  });
  m.def("unirational_map", [](const std::string& a, const std::string& b, const std::string& u, const std::string& v) {
    auto p = unirational_map(parse_rational(a), parse_rational(b), parse_rational(u), parse_rational(v));
    return py::make_tuple(to_string(p.p), to_string(p.q), to_string(p.r));
  });

  m.def("mod3_obstruction", [](const Coeffs4& c) { return mod3_obstruction(c); });
  m.def("sextic_search", [](std::int64_t max_sum, unsigned threads) {
    py::gil_scoped_release release;
    std::vector<std::array<std::int64_t, 4>> out;
    for (const auto& h : sextic_search(max_sum, threads)) out.push_back({h.x, h.y, h.z, h.w});
    return out;
  }, py::arg("max_sum"), py::arg("threads") = 0);
  m.def("surface_search", [](const Coeffs4& abcd, std::int64_t height, unsigned threads) {
    py::gil_scoped_release release;
    std::vector<std::array<std::int64_t, 4>> out;
    for (const auto& h : surface_search(abcd, height, threads)) out.push_back({h.x, h.y, h.z, h.w});
    return out;
  }, py::arg("abcd"), py::arg("height"), py::arg("threads") = 0);
  m.def("selmer_check", [](std::int64_t height, std::int64_t rhs) {
    std::vector<std::array<std::int64_t, 3>> out;
    for (const auto& h : selmer_check(height, rhs)) out.push_back({h.x, h.y, h.z});
    return out;
  }, py::arg("height"), py::arg("rhs") = 0);

  m.def("report_json", [](bool fast) {
    std::ostringstream out;
    {
      py::gil_scoped_release release;
      run_report(out, fast, true);
    }
    return out.str();
  }, py::arg("fast") = true);
}
