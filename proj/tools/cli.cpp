#include "cli.hpp"

#include "hilbcone/fixtures.hpp"
#include "hilbcone/json_io.hpp"
#include "hilbcone/reproduce.hpp"
#include "hilbcone/severi.hpp"
#include "hilbcone/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace hilbcone::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---- class ----------------------------------------------------------------

struct ClassArgs {
  std::string surface;
  std::string curve;
  int n = 0;
  int codim = 0;
  int subcollection = 0;
  long long h0 = -1;
  bool ramification = false;
  std::string format = "json";
};

void print_class_table(std::ostream& out, const SeveriResult& r) {
  const auto& c = r.checks;
  out << "surface                 " << r.surface << '\n';
  out << "class                   " << r.class_text() << '\n';
  if (r.ray) out << "normalized ray          " << format_class(parse_surface_spec(r.surface), *r.ray) << '\n';
  out << "dimension_equation      " << to_string(c.dimension_equation.status);
  if (c.dimension_equation.status != CheckStatus::NotApplicable)
    out << " (" << to_string(c.dimension_equation.lhs) << " vs " << to_string(c.dimension_equation.rhs) << ", "
        << c.dimension_equation.equation << ')';
  out << '\n';
  out << "k3c_effective           " << to_string(c.k3c_effective) << '\n';
  out << "genus_bound             " << to_string(c.genus_bound) << " (p_a = " << to_string(c.arithmetic_genus) << ")\n";
  out << "expected_dim_condition  " << to_string(c.expected_dim_condition) << '\n';
  out << "flags                   ";
  if (r.flags.empty()) out << "none";
  for (std::size_t i = 0; i < r.flags.size(); ++i) out << (i ? ", " : "") << r.flags[i];
  out << '\n';
}

int cmd_class(const ClassArgs& a, std::ostream& out) {
  const SurfaceLattice s = parse_surface_spec(a.surface);
  ExprContext ctx = ExprContext::for_surface(s, false);
  const SurfaceClass curve(ctx.parse(a.curve));
  const auto tag = s.kind().tag;
  if ((a.codim != 0 || a.subcollection != 0) && tag != SurfaceKindTag::P2)
    throw UsageError("--codim and --subcollection apply to the plane only");

  SeveriResult result;
  if (tag == SurfaceKindTag::P2 && is_integer(curve[0]) && curve[0] >= 1 && a.h0 < 0) {
    const long long d = to_int64(curve[0]);
    result = a.subcollection != 0 ? severi_class_subcollection(d, a.n, a.subcollection, a.codim)
                                  : severi_class_p2(d, a.n, a.codim);
  } else if (tag == SurfaceKindTag::Hirzebruch && curve.is_integral() && curve[0] >= 0 && curve[1] >= 0 &&
             a.h0 < 0) {
    result = severi_class_hirzebruch(s.kind().param, to_int64(curve[0]), to_int64(curve[1]), a.n);
  } else {
    if (a.codim != 0 || a.subcollection != 0) throw UsageError("--codim and --subcollection need a curve dH with d >= 1");
    std::optional<Integer> h0;
    if (a.h0 >= 0) h0 = Integer(a.h0);
    result = severi_class_general(s, curve, a.n, h0);
  }

  std::optional<RamificationReport> ram;
  if (a.ramification) ram = ramification_report(s, curve, a.n);

  if (a.format == "table") {
    print_class_table(out, result);
    if (ram)
      out << "ramification            gamma1 " << to_string(ram->gamma1_degree) << " (sweep " << ram->sweep
          << "), gamma2 " << to_string(ram->gamma2_degree) << '\n';
  } else {
    json j = to_json(result);
    if (ram) j["ramification"] = to_json(*ram);
    emit(out, j);
  }
  return kExitOk;
}

// ---- enumerate --------------------------------------------------------------

struct EnumerateArgs {
  std::string surface;
  long long n = 0;
  std::string filters = "chi";
  int k3 = 0;
  long long nmax = 0;
  std::string format = "json";
};

std::vector<HirzFilter> parse_filters(const std::string& text) {
  std::vector<HirzFilter> out;
  for (const auto& name : split_list(text)) out.push_back(parse_hirz_filter(name));
  return out;
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const bool table = a.format == "table";
  if (a.k3 != 0) {
    if (!a.surface.empty()) throw UsageError("use either --surface or --k3");
    if (a.nmax < 1) throw UsageError("--k3 needs --nmax >= 1");
    const auto e = enumerate_k3(a.k3, a.nmax);
    if (!table) return emit(out, to_json(e)), kExitOk;
    out << std::setw(6) << "d" << std::setw(8) << "n" << std::setw(8) << "p_a" << "  genus_ok  flags\n";
    for (const auto& c : e.solutions) {
      out << std::setw(6) << c.d << std::setw(8) << c.n << std::setw(8) << to_string(c.arithmetic_genus) << "  "
          << std::setw(8) << std::left << yes_no(c.genus_ok) << std::right << "  ";
      for (std::size_t i = 0; i < c.flags.size(); ++i) out << (i ? "," : "") << c.flags[i];
      out << '\n';
    }
    if (e.solutions.empty()) out << "(no solutions)\n";
    for (const auto& f : e.flags) out << "flag: " << f << '\n';
    return kExitOk;
  }

  if (a.surface.empty()) throw UsageError("enumerate needs --surface or --k3");
  if (a.n < 1) throw UsageError("--n must be at least 1");
  const SurfaceLattice s = parse_surface_spec(a.surface);
  switch (s.kind().tag) {
    case SurfaceKindTag::P2: {
      const auto cands = enumerate_p2(a.n);
      if (!table) return emit(out, p2_enumeration_to_json(a.n, cands)), kExitOk;
      out << std::setw(6) << "d" << std::setw(8) << "n" << "  d>=7  (6,9)\n";
      for (const auto& c : cands)
        out << std::setw(6) << c.d << std::setw(8) << c.n << "  " << std::setw(4) << std::left
            << yes_no(c.degree_at_least_7) << "  " << yes_no(c.treger_exception) << std::right << '\n';
      if (cands.empty()) out << "(no solutions)\n";
      return kExitOk;
    }
    case SurfaceKindTag::Hirzebruch: {
      const auto e = enumerate_hirzebruch(s.kind().param, a.n, parse_filters(a.filters));
      if (!table) return emit(out, to_json(e)), kExitOk;
      out << std::setw(6) << "a" << std::setw(8) << "b" << "  selected";
      for (auto f : all_hirz_filters()) out << "  " << to_string(f);
      out << '\n';
      for (const auto& c : e.candidates) {
        out << std::setw(6) << c.a << std::setw(8) << c.b << "  " << std::setw(8) << std::left
            << yes_no(c.passes(e.filters)) << std::right;
        for (auto f : all_hirz_filters()) {
          const std::string name = to_string(f);
          out << "  " << std::setw(static_cast<int>(name.size())) << std::left << yes_no(c.verdicts.at(f))
              << std::right;
        }
        out << '\n';
      }
      if (e.candidates.empty()) out << "(no solutions)\n";
      return kExitOk;
    }
    default:
      throw UsageError("enumerate supports p2 and fr:<r> surfaces, or --k3 <deg>");
  }
}

// ---- cone -------------------------------------------------------------------

struct ConeArgs {
  std::string action;
  std::string fixture;
  std::string rays;
  std::string surface;
  std::string subspace;
  std::string point;
};

Fixture load_cli_fixture(const std::string& name) {
  try {
    return load_fixture(resolve_fixture(name));
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

struct ConeInput {
  ExprContext ctx;
  std::optional<Fixture> fixture;
  std::vector<Vec> rays;

  Cone cone() const { return fixture ? fixture->walls.bounding_cone : Cone::from_generators(ctx.dim(), pad_all(rays)); }
  std::vector<Vec> pad_all(const std::vector<Vec>& vs) const {
    std::vector<Vec> out;
    for (const auto& v : vs) out.push_back(ctx.pad(v));
    return out;
  }
};

ConeInput cone_input(const ConeArgs& a, bool need_fixture) {
  if (!a.fixture.empty() && !a.rays.empty()) throw UsageError("use either --fixture or --rays");
  if (need_fixture && a.fixture.empty()) throw UsageError("cone " + a.action + " needs --fixture");
  if (a.fixture.empty() && a.rays.empty()) throw UsageError("cone " + a.action + " needs --rays or --fixture");
  if (!a.fixture.empty()) {
    Fixture f = load_cli_fixture(a.fixture);
    ExprContext ctx = fixture_context(f.walls);
    return ConeInput{std::move(ctx), std::move(f), {}};
  }
  ExprContext ctx = a.surface.empty() ? ExprContext::free_labels()
                                      : ExprContext::for_surface(parse_surface_spec(a.surface), true);
  std::vector<Vec> rays = ctx.parse_list(a.rays);
  return ConeInput{std::move(ctx), std::nullopt, std::move(rays)};
}

json signs_json(const WallSet& ws, const std::vector<int>& signs) {
  json walls = json::array();
  for (std::size_t i = 0; i < signs.size(); ++i)
    walls.push_back({{"label", ws.walls[i].label}, {"sign", signs[i]}});
  return json{{"signs", signs}, {"walls", walls}};
}

int cmd_cone(const ConeArgs& a, std::ostream& out) {
  if (a.action == "describe") {
    ConeInput in = cone_input(a, false);
    emit(out, to_json(in.cone(), in.ctx.labels()));
    return kExitOk;
  }
  if (a.action == "contains") {
    if (a.point.empty()) throw UsageError("cone contains needs --point");
    ConeInput in = cone_input(a, false);
    const Vec p = in.ctx.parse(a.point);
    const Cone c = in.cone();
    const Vec v = in.ctx.pad(p);
    emit(out, json{{"point", format_vector(in.ctx.labels(), v)},
                   {"contains", c.contains(v)},
                   {"interior", c.contains_interior(v)}});
    return kExitOk;
  }
  if (a.action == "restrict" || a.action == "walls-restrict") {
    if (a.subspace.empty()) throw UsageError("cone " + a.action + " needs --subspace");
    ConeInput in = cone_input(a, a.action == "walls-restrict");
    const std::vector<std::string> labels = split_list(a.subspace);
    std::vector<Vec> basis = in.ctx.parse_list(a.subspace);
    basis = in.pad_all(basis);
    if (a.action == "restrict") {
      emit(out, to_json(intersect_subspace(in.cone(), basis), labels));
    } else {
      emit(out, to_json(restrict_walls(in.fixture->walls, Subspace{labels, basis})));
    }
    return kExitOk;
  }
  if (a.action == "transport") {
    ConeInput in = cone_input(a, true);
    emit(out, to_json(transport_wallset_down(in.fixture->walls)));
    return kExitOk;
  }
  if (a.action == "locate") {
    if (a.point.empty()) throw UsageError("cone locate needs --point");
    ConeInput in = cone_input(a, true);
    const Vec v = in.ctx.parse(a.point);
    emit(out, signs_json(in.fixture->walls, locate(in.fixture->walls, v)));
    return kExitOk;
  }
  throw UsageError("unknown cone action '" + a.action + "'");
}

// ---- plot / reproduce -------------------------------------------------------

int cmd_plot(const std::string& fixture, const std::string& path, std::ostream& out) {
  const Fixture f = load_cli_fixture(fixture);
  const std::string svg = cross_section_svg(f);
  if (path.empty() || path == "-") {
    out << svg;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << svg;
  return kExitOk;
}

int cmd_reproduce(const std::string& filter, bool as_json, std::ostream& out) {
  const std::vector<std::string> tags = filter.empty() ? std::vector<std::string>{} : split_list(filter);
  const ReproduceReport report = run_reproduce(tags);
  if (as_json)
    emit(out, to_json(report));
  else
    out << format_report(report);
  return report.ok() ? kExitOk : kExitReproduceFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Severi divisors and wall arithmetic on Hilbert schemes of points on surfaces", "hilbcone"};
  app.require_subcommand(1, 1);
  const std::vector<std::string> formats{"json", "table"};

  ClassArgs ca;
  auto* cls = app.add_subcommand("class", "Severi divisor class of n-nodal curves in a linear system");
  cls->add_option("--surface", ca.surface, "p2, fr:<r>, k3:<deg> or blowup:<surface>:<k>")->required();
  cls->add_option("--curve", ca.curve, "curve class, e.g. 7H or 7E+7F")->required();
  cls->add_option("--n", ca.n, "number of nodes")->required()->check(CLI::PositiveNumber);
  cls->add_option("--codim", ca.codim, "codimension of the linear subsystem (plane only)")->check(CLI::NonNegativeNumber);
  cls->add_option("--subcollection", ca.subcollection, "total number of points m >= n (plane only)");
  cls->add_option("--h0", ca.h0, "h^0 of the curve class when it cannot be computed")->check(CLI::PositiveNumber);
  cls->add_flag("--ramification", ca.ramification, "also report the sweep and Hilbert-Chow fiber degrees");
  cls->add_option("--format", ca.format)->check(CLI::IsMember(formats));

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "parameter sets where the Severi locus is a divisor");
  en->add_option("--surface", ea.surface, "p2 or fr:<r>");
  en->add_option("--n", ea.n, "number of nodes");
  en->add_option("--filters", ea.filters, "comma separated: chi,h0_exact,genus,expected_dim,k3c_effective,ample,non_ample");
  en->add_option("--k3", ea.k3, "K3 degree (4, 6 or 8)");
  en->add_option("--nmax", ea.nmax, "largest n for --k3");
  en->add_option("--format", ea.format)->check(CLI::IsMember(formats));

  ConeArgs co;
  auto* cone = app.add_subcommand("cone", "cone and wall-set arithmetic");
  cone->add_option("action", co.action, "describe, contains, restrict, walls-restrict, transport or locate")
      ->required()
      ->check(CLI::IsMember({"describe", "contains", "restrict", "walls-restrict", "transport", "locate"}));
  cone->add_option("--fixture", co.fixture, "wall-set fixture file or bundled fixture name");
  cone->add_option("--rays", co.rays, "comma separated generators, e.g. B,7H-B");
  cone->add_option("--surface", co.surface, "interpret labels on this surface (with B)");
  cone->add_option("--subspace", co.subspace, "comma separated basis, e.g. H,B");
  cone->add_option("--point", co.point, "class to test or locate");

  std::string plot_fixture;
  std::string plot_out;
  auto* plot = app.add_subcommand("plot", "SVG cross section of a wall-set fixture");
  plot->add_option("--fixture", plot_fixture)->required();
  plot->add_option("--out", plot_out, "output file (stdout when omitted)");

  std::string rep_filter;
  bool rep_json = false;
  auto* rep = app.add_subcommand("reproduce", "rerun the catalog of published example values");
  rep->add_option("--filter", rep_filter, "comma separated tags: p2, fr, k3, cone");
  rep->add_flag("--json", rep_json, "machine-readable report");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (cls->parsed()) return cmd_class(ca, out);
    if (en->parsed()) return cmd_enumerate(ea, out);
    if (cone->parsed()) return cmd_cone(co, out);
    if (plot->parsed()) return cmd_plot(plot_fixture, plot_out, out);
    if (rep->parsed()) return cmd_reproduce(rep_filter, rep_json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hilbcone::cli
