#include "hilbcone/json_io.hpp"

#include <stdexcept>

namespace hilbcone {

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string, got " + j.dump());
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array, got " + j.dump());
  Vec out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

json to_json(const SurfaceLattice& s, const HilbDivClass& d) {
  return json{{"surface", {{"basis", s.basis_labels()}, {"coeffs", vec_to_json(d.surface_part.coeffs)}}},
              {"b", rational_to_json(d.b_coeff)},
              {"n", d.n}};
}

json to_json(const SurfaceLattice& s, const HilbCurveClass& c) {
  return json{{"surface", {{"basis", s.basis_labels()}, {"values", vec_to_json(c.dual_surface_values)}}},
              {"b_value", rational_to_json(c.b_value)},
              {"n", c.n},
              {"label", c.label}};
}

HilbDivClass hilb_class_from_json(const SurfaceLattice& s, const json& j) {
  const auto& surf = j.at("surface");
  if (surf.at("basis").get<std::vector<std::string>>() != s.basis_labels())
    throw std::invalid_argument("class basis does not match the surface");
  Vec coeffs = vec_from_json(surf.at("coeffs"));
  if (coeffs.size() != s.rank()) throw std::invalid_argument("class has wrong number of coefficients");
  return HilbDivClass{SurfaceClass(std::move(coeffs)), rational_from_json(j.at("b")), j.at("n").get<int>()};
}

namespace {

json dimension_json(const DimensionCheck& d) {
  return json{{"status", to_string(d.status)},
              {"lhs", rational_to_json(d.lhs)},
              {"rhs", rational_to_json(d.rhs)},
              {"equation", d.equation}};
}

}  // namespace

json to_json(const SeveriResult& r) {
  const SurfaceLattice s = parse_surface_spec(r.surface);
  json out{{"surface", r.surface},
           {"class", to_json(s, r.cls)},
           {"class_expr", r.class_text()},
           {"checks",
            {{"dimension_equation", dimension_json(r.checks.dimension_equation)},
             {"k3c_effective", to_string(r.checks.k3c_effective)},
             {"genus_bound", to_string(r.checks.genus_bound)},
             {"arithmetic_genus", rational_to_json(r.checks.arithmetic_genus)},
             {"expected_dim_condition", to_string(r.checks.expected_dim_condition)}}},
           {"flags", r.flags}};
  if (r.ray) {
    out["ray"] = to_json(s, *r.ray);
    out["ray_expr"] = format_class(s, *r.ray);
  }
  return out;
}

json to_json(const RamificationReport& r) {
  return json{{"sweep", r.sweep},
              {"gamma1_degree", rational_to_json(r.gamma1_degree)},
              {"gamma2_degree", rational_to_json(r.gamma2_degree)}};
}

json p2_enumeration_to_json(long long n, const std::vector<P2Candidate>& cands) {
  json sols = json::array();
  for (const auto& c : cands)
    sols.push_back({{"d", c.d},
                    {"n", c.n},
                    {"degree_at_least_7", c.degree_at_least_7},
                    {"treger_exception", c.treger_exception}});
  return json{{"surface", "p2"}, {"n", n}, {"solutions", sols}};
}

json to_json(const HirzebruchEnumeration& e) {
  json filters = json::array();
  for (auto f : e.filters) filters.push_back(to_string(f));
  json cands = json::array();
  for (const auto& c : e.candidates) {
    json verdicts = json::object();
    for (const auto& [f, ok] : c.verdicts) verdicts[to_string(f)] = ok;
    cands.push_back({{"a", c.a}, {"b", c.b}, {"selected", c.passes(e.filters)}, {"verdicts", verdicts}});
  }
  return json{{"surface", "fr:" + std::to_string(e.r)}, {"n", e.n}, {"filters", filters}, {"candidates", cands}};
}

json to_json(const K3Enumeration& e) {
  json sols = json::array();
  for (const auto& c : e.solutions)
    sols.push_back({{"d", c.d},
                    {"n", c.n},
                    {"arithmetic_genus", rational_to_json(c.arithmetic_genus)},
                    {"genus_ok", c.genus_ok},
                    {"flags", c.flags}});
  return json{{"surface", "k3:" + std::to_string(e.deg)}, {"n_max", e.n_max}, {"solutions", sols},
              {"flags", e.flags}};
}

namespace {

json vec_list(const std::vector<Vec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vec_to_json(v));
  return out;
}

json expr_list(const std::vector<Vec>& vs, const std::vector<std::string>& labels) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(format_vector(labels, v));
  return out;
}

}  // namespace

json to_json(const Cone& c, const std::vector<std::string>& labels) {
  json out{{"ambient_dim", c.ambient_dim()},
           {"dimension", c.dimension()},
           {"pointed", c.is_pointed()},
           {"generators", vec_list(c.generators())},
           {"facets", vec_list(c.facets())},
           {"equations", vec_list(c.equations())}};
  if (!labels.empty()) {
    out["basis"] = labels;
    out["generator_exprs"] = expr_list(c.generators(), labels);
  }
  return out;
}

json to_json(const Wall& w) {
  json out{{"functional", vec_to_json(w.functional)}, {"label", w.label}, {"cite", w.cite}};
  if (!w.note.empty()) out["note"] = w.note;
  out["position"] = to_string(w.position);
  return out;
}

json to_json(const WallSet& w) {
  json walls = json::array();
  for (const auto& wall : w.walls) walls.push_back(to_json(wall));
  return json{{"surface", w.surface},
              {"n", w.n},
              {"basis", w.coordinate_labels},
              {"bounding_cone", vec_list(w.bounding_cone.generators())},
              {"walls", walls}};
}

json to_json(const WallRestriction& r) {
  json dropped = json::array();
  for (const auto& wall : r.dropped) dropped.push_back(to_json(wall));
  json out = to_json(r.restricted);
  out["dropped"] = dropped;
  return out;
}

}  // namespace hilbcone
