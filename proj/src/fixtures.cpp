#include "hilbcone/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#ifndef HILBCONE_FIXTURE_DIR
#define HILBCONE_FIXTURE_DIR "data/fixtures"
#endif

namespace hilbcone {

namespace {

std::vector<std::string> default_basis(const std::string& surface) {
  std::vector<std::string> labels = parse_surface_spec(surface).basis_labels();
  labels.push_back("B");
  return labels;
}

std::vector<Vec> vec_list_from_json(const json& j, std::size_t dim, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<Vec> out;
  for (const auto& x : j) {
    Vec v = vec_from_json(x);
    if (v.size() != dim) throw std::invalid_argument(std::string(what) + " entry has wrong dimension");
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Fixture fixture_from_json(const json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("fixture must be a JSON object");
    const std::string surface = j.at("surface").get<std::string>();
    const int n = j.at("n").get<int>();
    std::vector<std::string> basis = j.contains("basis") ? j.at("basis").get<std::vector<std::string>>()
                                                         : default_basis(surface);
    const std::size_t dim = basis.size();
    Cone cone = Cone::from_generators(dim, vec_list_from_json(j.at("bounding_cone"), dim, "bounding_cone"));

    std::vector<Wall> walls;
    for (const auto& w : j.at("walls")) {
      Wall wall;
      wall.functional = vec_from_json(w.at("functional"));
      wall.label = w.value("label", "");
      wall.cite = w.value("cite", "");
      wall.note = w.value("note", "");
      walls.push_back(std::move(wall));
    }

    Fixture f{make_wallset(surface, n, std::move(basis), std::move(cone), std::move(walls)), {}, {}, {}};
    if (j.contains("marks")) {
      for (const auto& m : j.at("marks")) {
        Vec cls = vec_from_json(m.at("class"));
        if (cls.size() != dim) throw std::invalid_argument("mark has wrong dimension");
        f.marks.push_back(Mark{m.at("label").get<std::string>(), std::move(cls)});
      }
    }
    if (j.contains("shaded")) f.shaded = vec_list_from_json(j.at("shaded"), dim, "shaded");
    if (j.contains("section")) {
      const auto& s = j.at("section");
      Section sec{vec_from_json(s.at("normal")), vec_from_json(s.at("x")), vec_from_json(s.at("y"))};
      if (sec.normal.size() != dim || sec.x.size() != dim || sec.y.size() != dim)
        throw std::invalid_argument("section has wrong dimension");
      f.section = std::move(sec);
    }
    return f;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed fixture: ") + e.what());
  }
}

json fixture_to_json(const Fixture& f) {
  json out = to_json(f.walls);
  if (!f.marks.empty()) {
    json marks = json::array();
    for (const auto& m : f.marks) marks.push_back({{"label", m.label}, {"class", vec_to_json(m.cls)}});
    out["marks"] = marks;
  }
  if (!f.shaded.empty()) {
    json shaded = json::array();
    for (const auto& v : f.shaded) shaded.push_back(vec_to_json(v));
    out["shaded"] = shaded;
  }
  if (f.section)
    out["section"] = {{"normal", vec_to_json(f.section->normal)},
                      {"x", vec_to_json(f.section->x)},
                      {"y", vec_to_json(f.section->y)}};
  return out;
}

Fixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("fixture " + path.string() + " is not valid JSON: " + e.what());
  }
  return fixture_from_json(j);
}

std::filesystem::path bundled_fixture_dir() { return HILBCONE_FIXTURE_DIR; }

std::filesystem::path resolve_fixture(const std::string& name) {
  namespace fs = std::filesystem;
  if (fs::exists(name)) return name;
  if (const char* env = std::getenv("HILBCONE_FIXTURES"); env && *env) {
    fs::path p = fs::path(env) / name;
    if (fs::exists(p)) return p;
  }
  fs::path p = bundled_fixture_dir() / name;
  if (fs::exists(p)) return p;
  throw std::runtime_error("fixture not found: " + name);
}

ExprContext fixture_context(const WallSet& walls) {
  try {
    const SurfaceLattice s = parse_surface_spec(walls.surface);
    ExprContext ctx = ExprContext::for_surface(s, true);
    if (ctx.labels() == walls.coordinate_labels) return ctx;
  } catch (const std::invalid_argument&) {
  }
  return ExprContext(walls.coordinate_labels);
}

}  // namespace hilbcone
