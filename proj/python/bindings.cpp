#include "hilbcone/fixtures.hpp"
#include "hilbcone/json_io.hpp"
#include "hilbcone/reproduce.hpp"
#include "hilbcone/severi.hpp"
#include "hilbcone/svg.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace hilbcone;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::int_(py::str(numerator_of(q).str())), py::int_(py::str(denominator_of(q).str())));
}

Rational to_rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

Vec to_vec(const py::sequence& seq) {
  Vec v;
  for (const auto& x : seq) v.push_back(to_rational(x));
  return v;
}

std::vector<Vec> to_vecs(const py::sequence& seq) {
  std::vector<Vec> out;
  for (const auto& x : seq) out.push_back(to_vec(x.cast<py::sequence>()));
  return out;
}

py::list from_vec(const Vec& v) {
  py::list out;
  for (const auto& q : v) out.append(fraction(q));
  return out;
}

py::object from_json(const json& j) {
  switch (j.type()) {
    case json::value_t::object: {
      py::dict d;
      for (const auto& [k, v] : j.items()) d[py::str(k)] = from_json(v);
      return std::move(d);
    }
    case json::value_t::array: {
      py::list l;
      for (const auto& v : j) l.append(from_json(v));
      return std::move(l);
    }
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    default: return py::none();
  }
}

Fixture fixture_by_name(const std::string& name) { return load_fixture(resolve_fixture(name)); }

py::dict severi_class(const std::string& surface, const std::string& curve, int n, int codim,
                      std::optional<int> subcollection, std::optional<long long> h0) {
  const SurfaceLattice s = parse_surface_spec(surface);
  const SurfaceClass c(ExprContext::for_surface(s, false).parse(curve));
  const auto tag = s.kind().tag;
  SeveriResult r;
  if (tag == SurfaceKindTag::P2 && !h0 && is_integer(c[0]) && c[0] >= 1) {
    const long long d = to_int64(c[0]);
    r = subcollection ? severi_class_subcollection(d, n, *subcollection, codim) : severi_class_p2(d, n, codim);
  } else {
    if (codim != 0 || subcollection) throw std::invalid_argument("codim and subcollection need a plane curve dH");
    if (tag == SurfaceKindTag::Hirzebruch && !h0 && c.is_integral() && c[0] >= 0 && c[1] >= 0)
      r = severi_class_hirzebruch(s.kind().param, to_int64(c[0]), to_int64(c[1]), n);
    else
      r = severi_class_general(s, c, n, h0 ? std::optional<Integer>(Integer(*h0)) : std::nullopt);
  }
  return from_json(to_json(r)).cast<py::dict>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Severi divisors and wall arithmetic on Hilbert schemes of points on surfaces";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("severi_class", &severi_class, py::arg("surface"), py::arg("curve"), py::arg("n"), py::arg("codim") = 0,
        py::arg("subcollection") = py::none(), py::arg("h0") = py::none(),
        "Severi divisor class as a dict with class, class_expr, checks and flags.");

  m.def(
      "ramification_report",
      [](const std::string& surface, const std::string& curve, int n) {
        const SurfaceLattice s = parse_surface_spec(surface);
        const SurfaceClass c(ExprContext::for_surface(s, false).parse(curve));
        const auto r = ramification_report(s, c, n);
        return py::make_tuple(fraction(r.gamma1_degree), fraction(r.gamma2_degree));
      },
      py::arg("surface"), py::arg("curve"), py::arg("n"));

  m.def(
      "enumerate_p2", [](long long n) { return from_json(p2_enumeration_to_json(n, enumerate_p2(n))); },
      py::arg("n"));
  m.def(
      "enumerate_hirzebruch",
      [](long long r, long long n, const std::vector<std::string>& names) {
        std::vector<HirzFilter> filters;
        for (const auto& f : names) filters.push_back(parse_hirz_filter(f));
        return from_json(to_json(enumerate_hirzebruch(r, n, filters)));
      },
      py::arg("r"), py::arg("n"), py::arg("filters") = std::vector<std::string>{"chi"});
  m.def(
      "enumerate_k3", [](int deg, long long n_max) { return from_json(to_json(enumerate_k3(deg, n_max))); },
      py::arg("deg"), py::arg("n_max"));
  m.def(
      "imposing_wall",
      [](long long d) {
        const auto w = imposing_wall(d);
        return py::make_tuple(py::int_(py::str(w.k.str())), format_class(make_p2(), w.cls));
      },
      py::arg("d"));

  m.def(
      "slope_decompose",
      [](const std::string& surface, const std::string& d, const std::string& j, const std::string& h, int n) {
        const SurfaceLattice s = parse_surface_spec(surface);
        ExprContext ctx = ExprContext::for_surface(s, true);
        auto cls = [&](const std::string& t) { return HilbDivClass::from_vector(ctx.parse(t), n); };
        return fraction(slope_decompose(cls(d), cls(j), cls(h)));
      },
      py::arg("surface"), py::arg("d"), py::arg("j"), py::arg("h"), py::arg("n") = 1);

  m.def(
      "pair_curve",
      [](const py::sequence& values, const py::object& b_value, const std::string& surface, const std::string& cls,
         int n) {
        const SurfaceLattice s = parse_surface_spec(surface);
        const auto curve = curve_from_pairings(to_vec(values), to_rational(b_value), n, "curve");
        return fraction(pair(curve, HilbDivClass::from_vector(ExprContext::for_surface(s, true).parse(cls), n)));
      },
      py::arg("values"), py::arg("b_value"), py::arg("surface"), py::arg("cls"), py::arg("n") = 1,
      "Pairing of a curve given by its intersection numbers with a divisor class expression.");

  m.def(
      "arithmetic_genus",
      [](const std::string& surface, const std::string& curve) {
        const SurfaceLattice s = parse_surface_spec(surface);
        return fraction(arithmetic_genus(s, SurfaceClass(ExprContext::for_surface(s, false).parse(curve))));
      },
      py::arg("surface"), py::arg("curve"));
  m.def(
      "h0",
      [](const std::string& surface, const std::string& curve) -> py::object {
        const SurfaceLattice s = parse_surface_spec(surface);
        const auto v = h0(s, SurfaceClass(ExprContext::for_surface(s, false).parse(curve)));
        if (!v) return py::none();
        return py::int_(py::str(v->str()));
      },
      py::arg("surface"), py::arg("curve"));

  m.def(
      "transport_up",
      [](int r, const py::sequence& coords) {
        return from_vec(mat_vec(transport_up_matrix(r), to_vec(coords)));
      },
      py::arg("r"), py::arg("coords"), "(E, F, B) coordinates on F_r[n] carried to F_{r+1}[n].");
  m.def(
      "transport_down",
      [](int r, const py::sequence& coords) {
        return from_vec(mat_vec(transport_down_matrix(r), to_vec(coords)));
      },
      py::arg("r"), py::arg("coords"), "(E, F, B) coordinates on F_{r+1}[n] carried to F_r[n].");

  m.def(
      "cone",
      [](const py::sequence& rays) {
        const auto gens = to_vecs(rays);
        if (gens.empty()) throw std::invalid_argument("cone needs at least one ray");
        return from_json(to_json(Cone::from_generators(gens.front().size(), gens)));
      },
      py::arg("rays"));
  m.def(
      "cone_contains",
      [](const py::sequence& rays, const py::sequence& point, bool interior) {
        const auto gens = to_vecs(rays);
        if (gens.empty()) throw std::invalid_argument("cone needs at least one ray");
        const Cone c = Cone::from_generators(gens.front().size(), gens);
        const Vec p = to_vec(point);
        return interior ? c.contains_interior(p) : c.contains(p);
      },
      py::arg("rays"), py::arg("point"), py::arg("interior") = false);
  m.def(
      "intersect_subspace",
      [](const py::sequence& rays, const py::sequence& basis) {
        const auto gens = to_vecs(rays);
        if (gens.empty()) throw std::invalid_argument("cone needs at least one ray");
        return from_json(to_json(intersect_subspace(Cone::from_generators(gens.front().size(), gens), to_vecs(basis))));
      },
      py::arg("rays"), py::arg("basis"));

  m.def(
      "load_fixture", [](const std::string& name) { return from_json(fixture_to_json(fixture_by_name(name))); },
      py::arg("name"));
  m.def(
      "restrict_walls",
      [](const std::string& fixture, const std::string& subspace) {
        const Fixture f = fixture_by_name(fixture);
        ExprContext ctx = fixture_context(f.walls);
        return from_json(to_json(restrict_walls(f.walls, Subspace{split_list(subspace), ctx.parse_list(subspace)})));
      },
      py::arg("fixture"), py::arg("subspace"));
  m.def(
      "transport_wallset_down",
      [](const std::string& fixture) { return from_json(to_json(transport_wallset_down(fixture_by_name(fixture).walls))); },
      py::arg("fixture"));
  m.def(
      "locate",
      [](const std::string& fixture, const std::string& point) {
        const Fixture f = fixture_by_name(fixture);
        return locate(f.walls, fixture_context(f.walls).parse(point));
      },
      py::arg("fixture"), py::arg("point"));
  m.def(
      "plot", [](const std::string& fixture) { return cross_section_svg(fixture_by_name(fixture)); },
      py::arg("fixture"), "SVG text of the fixture's cross section.");

  m.def(
      "reproduce",
      [](const std::vector<std::string>& tags) { return from_json(to_json(run_reproduce(tags))); },
      py::arg("tags") = std::vector<std::string>{});
}
