#include "diag/serialize.hpp"

#include <json.hpp>

namespace diag {

using nlohmann::json;

namespace {

json rational_value(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

Rational rational_from(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("coefficient must be an integer or a \"p/q\" string");
}

json poly_value(const Poly& f) {
  json out = json::array();
  for (const auto& c : f.coeffs()) out.push_back(rational_value(c));
  return out;
}

Poly poly_from(const json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial must be a coefficient array");
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(rational_from(e));
  return Poly(std::move(c));
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string rational_to_json(const Rational& r) { return rational_value(r).dump(); }

std::string poly_to_json(const Poly& f) { return poly_value(f).dump(); }

Poly poly_from_json(std::string_view text) { return poly_from(parse(text)); }

std::string solution_to_json(const ParametricSolution& sol) {
  const auto& e = sol.equation;
  json eq = {{"a", rational_value(e.a)},
             {"b", rational_value(e.b)},
             {"exponents", json(std::vector<int>(e.exponents.begin(), e.exponents.end()))}};
  json out = {{"equation", eq},   {"x", poly_value(sol.x)},        {"y", poly_value(sol.y)},
              {"z", poly_value(sol.z)}, {"w", poly_value(sol.w)},  {"generator", sol.generator},
              {"m", sol.m}};
  return out.dump();
}

ParametricSolution solution_from_json(std::string_view text) {
  json j = parse(text);
  if (!j.is_object()) throw InvalidInput("solution must be a JSON object");
  try {
    const json& eq = field(j, "equation");
    const json& ex = field(eq, "exponents");
    if (!ex.is_array() || ex.size() != 4) throw InvalidInput("exponents must be four integers");
    std::array<int, 4> e{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (!ex[i].is_number_integer()) throw InvalidInput("exponents must be four integers");
      e[i] = ex[i].get<int>();
    }
    DiagonalEquation equation(rational_from(field(eq, "a")), rational_from(field(eq, "b")), e);
    std::string gen;
    if (auto it = j.find("generator"); it != j.end()) {
      if (!it->is_string()) throw InvalidInput("generator must be a string");
      gen = it->get<std::string>();
    }
    long m = 0;
    if (auto it = j.find("m"); it != j.end()) {
      if (!it->is_number_integer()) throw InvalidInput("m must be an integer");
      m = it->get<long>();
    }
    return {equation, poly_from(field(j, "x")), poly_from(field(j, "y")), poly_from(field(j, "z")),
            poly_from(field(j, "w")), gen, m};
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad solution record: ") + e.what());
  }
}

}  // namespace diag
