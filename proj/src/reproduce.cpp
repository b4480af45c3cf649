#include "hilbcone/reproduce.hpp"

#include "hilbcone/fixtures.hpp"
#include "hilbcone/svg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hilbcone {

namespace {

// A check returns an empty string on success and a reason otherwise. A
// warning check returns the discrepancy it observed, or throws when the
// discrepancy is not there.
using CheckFn = std::function<std::string()>;

struct Entry {
  std::string id;
  std::string tag;
  std::string description;
  bool warning;
  CheckFn fn;
};

std::string expect_eq(const std::string& what, const std::string& got, const std::string& want) {
  return got == want ? "" : what + ": got " + got + ", want " + want;
}

std::string expect_q(const std::string& what, const Rational& got, const Rational& want) {
  return expect_eq(what, to_string(got), to_string(want));
}

std::string all_of(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts)
    if (!p.empty()) out += (out.empty() ? "" : "; ") + p;
  return out;
}

HilbDivClass parse_hilb(const SurfaceLattice& s, const std::string& text, int n) {
  ExprContext ctx = ExprContext::for_surface(s, true);
  return HilbDivClass::from_vector(ctx.parse(text), n);
}

std::string class_is(const SeveriResult& r, const std::string& want) {
  const SurfaceLattice s = parse_surface_spec(r.surface);
  const HilbDivClass expected = parse_hilb(s, want, r.cls.n);
  return r.cls == expected ? "" : "class " + r.class_text() + ", want " + want;
}

std::string pairs_text(const std::vector<std::pair<long long, long long>>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i)
    out += (i ? "," : "") + std::string("(") + std::to_string(ps[i].first) + "," + std::to_string(ps[i].second) + ")";
  return out + "}";
}

std::vector<std::pair<long long, long long>> selected_pairs(const HirzebruchEnumeration& e, long long min_a = 0) {
  std::vector<std::pair<long long, long long>> out;
  for (const auto& c : e.selected())
    if (c.a >= min_a) out.emplace_back(c.a, c.b);
  return out;
}

Fixture bundled(const std::string& name) { return load_fixture(resolve_fixture(name)); }

std::vector<Entry> p2_checks() {
  std::vector<Entry> out;
  const SurfaceLattice p2 = make_p2();
  const HilbDivClass J = parse_hilb(p2, "7H-B", 12);
  const HilbDivClass M = parse_hilb(p2, "25H-7/2B", 12);
  const HilbDivClass H = lift_divisor(p2, p2.named("H"), 12);

  out.push_back({"p2.sev12", "p2", "Sev(12) on P2[12] is 18H-5/2B with every check passing", false, [] {
                   const auto r = severi_class_p2(7, 12);
                   return all_of({class_is(r, "18H-5/2B"),
                                  r.flags.empty() ? "" : "unexpected flags",
                                  r.checks.dimension_equation.status == CheckStatus::Pass ? "" : "dimension check"});
                 }});
  out.push_back({"p2.sev12.general", "p2", "general formula on P2 with C = 7H gives 18H-5/2B", false, [p2] {
                   return class_is(severi_class_general(p2, p2.make_class({7}), 12), "18H-5/2B");
                 }});
  out.push_back({"p2.sev12.ramification", "p2", "gamma1 . Sev(12) = 3d-3 = 18 and gamma2 . Sev(12) = 5", false,
                 [p2] {
                   const auto rep = ramification_report(p2, p2.make_class({7}), 12);
                   return all_of({expect_q("gamma1", rep.gamma1_degree, 18), expect_q("gamma2", rep.gamma2_degree, 5)});
                 }});
  out.push_back({"p2.sev12.integral", "p2", "Sev(12), J = 7H-B and D17 = 17H-1/2B are Pic-integral", false, [p2, J] {
                   const bool ok = is_pic_integral(severi_class_p2(7, 12).cls) && is_pic_integral(J) &&
                                   is_pic_integral(parse_hilb(p2, "17H-1/2B", 145));
                   return std::string(ok ? "" : "integrality predicate rejected a class");
                 }});
  out.push_back({"p2.n12.slope_M", "p2", "M = 25H-7/2B ~ J + 1/7 H", false,
                 [J, M, H] { return expect_q("t", slope_decompose(M, J, H), Rational(1, 7)); }});
  out.push_back({"p2.n12.slope_sev", "p2", "Sev(12) = 18H-5/2B ~ J + 1/5 H", false, [J, H] {
                   return expect_q("t", slope_decompose(severi_class_p2(7, 12).cls, J, H), Rational(1, 5));
                 }});
  out.push_back({"p2.n12.P4", "p2", "P4 . H = 4, P4 . B = 28, P4 . J = 0, P4 . Sev(12) = 2", false, [p2, J] {
                   const auto P4 = curve_from_pairings({Rational(4)}, Rational(28), 12, "P4");
                   return all_of({expect_q("P4.J", pair(P4, J), 0),
                                  expect_q("P4.Sev", pair(P4, severi_class_p2(7, 12).cls), 2),
                                  expect_q("P4.B", pair(P4, exceptional_divisor(p2, 12)), 28),
                                  expect_q("P4.H", pair(P4, lift_divisor(p2, p2.named("H"), 12)), 4)});
                 }});
  out.push_back({"p2.sev145", "p2", "Sev(145) on P2[145] is 81H-5/2B", false,
                 [] { return class_is(severi_class_p2(28, 145), "81H-5/2B"); }});
  out.push_back({"p2.sev145.d17", "p2", "D17 = 17H-1/2B has larger slope than Sev(145)", false, [] {
                   const auto sev = severi_class_p2(28, 145).cls;
                   // Normalize to B-coefficient -1/2 and compare H-coefficients.
                   const Rational k = sev.surface_part[0] * Rational(-1, 2) / sev.b_coeff;
                   return all_of({expect_q("normalized slope", k, Rational(81, 5)),
                                  k < 17 ? "" : "Sev(145) not below D17"});
                 }});
  out.push_back({"p2.sev18.codim1", "p2", "Sev(18, L) for degree 9 through a point is 24H-5/2B", false, [] {
                   const auto r = severi_class_p2(9, 18, 1);
                   return all_of({class_is(r, "24H-5/2B"),
                                  r.checks.dimension_equation.status == CheckStatus::Pass ? "" : "dimension check",
                                  expect_q("binom(11,2)", r.checks.dimension_equation.lhs, 55)});
                 }});
  out.push_back({"p2.sub13", "p2", "nodes among 13 points: D = 216H-55/2B", false,
                 [] { return class_is(severi_class_subcollection(7, 12, 13), "216H-55/2B"); }});
  out.push_back({"p2.sub13.curves", "p2", "test curves: C . D = 12*18 = 216 and C' . D = 18+11*13 = 161", false,
                 [p2] {
                   const auto D = severi_class_subcollection(7, 12, 13).cls;
                   const auto C = curve_from_divisor(p2, p2.named("H"), 13, "C");
                   const auto Cp = curve_from_pairings({Rational(1)}, Rational(2), 13, "C'");
                   return all_of({expect_q("C.D", pair(C, D), 12 * 18), expect_q("C'.D", pair(Cp, D), 18 + 11 * 13)});
                 }});
  out.push_back({"p2.enum.d7", "p2", "C(9,2) = 36 = 3*12: degree 7 gives n = 12", false, [] {
                   const auto n = enumerate_p2_by_d(7);
                   return std::string(n && *n == 12 ? "" : "degree 7 did not give n = 12");
                 }});
  out.push_back({"p2.enum.d28", "p2", "C(30,2) = 435 = 3*145: degree 28 gives n = 145", false, [] {
                   const auto n = enumerate_p2_by_d(28);
                   return std::string(n && *n == 145 ? "" : "degree 28 did not give n = 145");
                 }});
  out.push_back({"p2.imposing", "p2", "d = 1 mod 5 gives Sev(n) = kH - 1/2B with k integral", false, [] {
                   std::string err;
                   for (long long d : {6, 11, 16, 21}) {
                     const auto w = imposing_wall(d);
                     if (w.k != (3 * d - 3) / 5) err += "wrong k for d=" + std::to_string(d) + " ";
                   }
                   for (long long d : {7, 8, 9, 10}) {
                     try {
                       imposing_wall(d);
                       err += "accepted d=" + std::to_string(d) + " ";
                     } catch (const std::invalid_argument&) {
                     }
                   }
                   return err;
                 }});
  out.push_back({"EQ_SEV_PLUS_ONE", "p2",
                 "incomplete systems: C(d+2,2) = 3n + r is used, the printed form is 3n + r + 1", true, [] {
                   const auto r = severi_class_p2(9, 18, 1);
                   if (!r.has_flag(flags::kEqSevPlusOne)) throw std::logic_error("flag missing");
                   return std::string("C(11,2) = 55 = 3*18 + 1; the printed relation would need 56");
                 }});
  return out;
}

std::vector<Entry> fr_checks() {
  std::vector<Entry> out;
  out.push_back({"fr.sev.3_8", "fr", "Sev(10, L_{3,8}) on F1 is 7E+21F-5/2B", false,
                 [] { return class_is(severi_class_hirzebruch(1, 3, 8, 10), "7E+21F-5/2B"); }});
  out.push_back({"fr.sev.4_7", "fr", "Sev(10, L_{4,7}) on F1 is 10E+18F-5/2B", false,
                 [] { return class_is(severi_class_hirzebruch(1, 4, 7, 10), "10E+18F-5/2B"); }});
  out.push_back({"fr.sev.7_7", "fr", "Sev(12, L_{7,7}) on F1 is 19E+18F-5/2B = 18H+E-5/2B", false, [] {
                   const auto r = severi_class_hirzebruch(1, 7, 7, 12);
                   return all_of({class_is(r, "19E+18F-5/2B"), class_is(r, "18H+E-5/2B")});
                 }});
  out.push_back({"fr.sev.general", "fr", "general formula agrees with the Hirzebruch formula on all three classes",
                 false, [] {
                   const SurfaceLattice f1 = make_hirzebruch(1);
                   std::string err;
                   for (auto [a, b, n] : {std::tuple{3, 8, 10}, std::tuple{4, 7, 10}, std::tuple{7, 7, 12}}) {
                     if (severi_class_general(f1, f1.make_class({a, b}), n).cls !=
                         severi_class_hirzebruch(1, a, b, n).cls)
                       err += "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ") ";
                   }
                   return err;
                 }});
  out.push_back({"fr.H", "fr", "H = E + rF lifts to H[12] on F1", false, [] {
                   const SurfaceLattice f1 = make_hirzebruch(1);
                   const auto h = lift_divisor(f1, f1.make_class({1, 1}), 12);
                   return h == lift_divisor(f1, f1.named("H"), 12) ? "" : std::string("H is not E+F");
                 }});
  out.push_back({"fr.enum.1_12", "fr", "F1[12] solutions include (7,7), (2,12), (0,35)", false, [] {
                   const auto sel = selected_pairs(enumerate_hirzebruch(1, 12, {HirzFilter::Chi}));
                   std::string err;
                   for (auto p : {std::pair<long long, long long>{7, 7}, {2, 12}, {0, 35}})
                     if (std::find(sel.begin(), sel.end(), p) == sel.end()) err += "missing " + pairs_text({p}) + " ";
                   return err;
                 }});
  out.push_back({"fr.enum.1_10", "fr", "F1[10] irreducible nodal classes are 3E+8F and 4E+7F", false, [] {
                   const auto e = enumerate_hirzebruch(1, 10,
                                                       {HirzFilter::Chi, HirzFilter::Genus, HirzFilter::K3cEffective});
                   const auto sel = selected_pairs(e, 1);
                   return expect_eq("selected", pairs_text(sel), "{(3,8),(4,7)}");
                 }});
  out.push_back({"fr.enum.published", "fr",
                 "F_r[12] published classes for r = 2..10 are the solutions with K+3C effective and b <= ar",
                 false, [] {
                   std::string err;
                   for (long long r = 2; r <= 10; ++r) {
                     const long long k = r / 2;
                     const auto sel = selected_pairs(enumerate_hirzebruch(
                         r, 12, {HirzFilter::Chi, HirzFilter::K3cEffective, HirzFilter::NonAmple}));
                     std::vector<std::pair<long long, long long>> want;
                     if (r % 2 == 1) {
                       want = {{7, 7 * k + 7}, {8, 8 * k + 7}, {23, 23 * k + 12}, {71, 71 * k + 35}};
                     } else {
                       if (k > 2) want.emplace_back(3, 3 * k + 8);
                       for (auto [a, c] : {std::pair<long long, long long>{5, 5}, {8, 3}, {11, 2}, {17, 1}, {35, 0}})
                         want.emplace_back(a, a * k + c);
                     }
                     if (sel != want) err += "r=" + std::to_string(r) + ": " + pairs_text(sel) + " ";
                   }
                   return err;
                 }});
  out.push_back({"fr.transport", "fr", "the roof carries H_r to H_{r+1} and fixes B", false, [] {
                   std::string err;
                   for (int r = 0; r <= 10; ++r) {
                     const SurfaceLattice fr = make_hirzebruch(r);
                     const SurfaceLattice fr1 = make_hirzebruch(r + 1);
                     const auto h = transport_up(fr, lift_divisor(fr, fr.named("H"), 3));
                     if (h != lift_divisor(fr1, fr1.named("H"), 3)) err += "H r=" + std::to_string(r) + " ";
                     const auto b = exceptional_divisor(fr, 3);
                     if (transport_up(fr, b) != exceptional_divisor(fr1, 3)) err += "B up r=" + std::to_string(r) + " ";
                     if (transport_down(fr1, exceptional_divisor(fr1, 3)) != b) err += "B down r=" + std::to_string(r) + " ";
                   }
                   return err;
                 }});
  out.push_back({"FR12_LIST_MISMATCH", "fr",
                 "F_{2k}[12]: the published lists differ from the solutions with n <= p_a", true,
                 [] {
                   std::string diff;
                   for (long long k = 1; k <= 5; ++k) {
                     const auto sel = selected_pairs(enumerate_hirzebruch(2 * k, 12, {HirzFilter::Chi, HirzFilter::Genus}));
                     std::vector<std::pair<long long, long long>> published;
                     if (k > 2) published.emplace_back(3, 3 * k + 8);
                     for (auto [a, c] : {std::pair<long long, long long>{5, 5}, {8, 3}, {11, 2}, {17, 1}, {35, 0}})
                       published.emplace_back(a, a * k + c);
                     if (sel != published)
                       diff += "k=" + std::to_string(k) + ": genus filter gives " + pairs_text(sel) + " ";
                   }
                   if (diff.empty()) throw std::logic_error("no mismatch observed");
                   return diff;
                 }});
  return out;
}

std::vector<Entry> k3_checks() {
  std::vector<Entry> out;
  out.push_back({"k3.deg8.1_2", "k3", "degree 8 K3: (d, n) = (1, 2) gives a Severi divisor", false, [] {
                   const auto e = enumerate_k3(8, 10);
                   const bool found = std::any_of(e.solutions.begin(), e.solutions.end(),
                                                  [](const K3Candidate& c) { return c.d == 1 && c.n == 2; });
                   return std::string(found ? "" : "(1,2) missing");
                 }});
  out.push_back({"k3.deg8.class", "k3", "Sev(2, L) on the degree 8 K3 is 3L-5/2B", false, [] {
                   const SurfaceLattice k3 = make_k3(8);
                   return class_is(severi_class_general(k3, k3.make_class({1}), 2), "3L-5/2B");
                 }});
  out.push_back({"k3.deg8.genus", "k3", "hyperplane sections of the degree 8 K3 have genus 5", false, [] {
                   const SurfaceLattice k3 = make_k3(8);
                   return expect_q("p_a(L)", arithmetic_genus(k3, k3.make_class({1})), 5);
                 }});
  out.push_back({"k3.deg6.empty", "k3", "degree 6 K3: no Severi divisors from |O(d)|", false, [] {
                   return std::string(enumerate_k3(6, 100).solutions.empty() ? "" : "unexpected solutions");
                 }});
  out.push_back({"K3_SOLUTION_SET_MISMATCH", "k3",
                 "degree 4 has no solutions and degree 8 has more than (1, 2)", true, [] {
                   const auto e4 = enumerate_k3(4, 100);
                   const auto e8 = enumerate_k3(8, 10);
                   const bool extra = std::any_of(e8.solutions.begin(), e8.solutions.end(),
                                                  [](const K3Candidate& c) { return c.d == 2 && c.n == 6; });
                   if (!e4.solutions.empty() || !extra) throw std::logic_error("mismatch not observed");
                   return std::string("degree 4: 2d^2+2 = 3n has no solution; degree 8: (2,6) also solves 4d^2+2 = 3n");
                 }});
  return out;
}

std::vector<Entry> cone_checks() {
  std::vector<Entry> out;
  out.push_back({"cone.eff_fr", "cone", "Eff(F_r) = <E, F> has facets E-dual and F-dual", false, [] {
                   const Cone c = Cone::from_generators(2, {Vec{1, 0}, Vec{0, 1}});
                   return all_of({c.facets() == std::vector<Vec>{Vec{0, 1}, Vec{1, 0}} ? "" : "wrong facets",
                                  c.contains(Vec{1, 1}) ? "" : "E+F not inside",
                                  c.contains(Vec{-1, 0}) ? "-E inside" : ""});
                 }});
  out.push_back({"cone.eff_p2_12", "cone", "<B, 7H-B> contains Sev(12) = 18H-5/2B and M = 25H-7/2B", false, [] {
                   const Cone c = Cone::from_generators(2, {Vec{0, 1}, Vec{7, -1}});
                   return all_of({c.contains(Vec{18, Rational(-5, 2)}) ? "" : "Sev(12) outside",
                                  c.contains(Vec{25, Rational(-7, 2)}) ? "" : "M outside"});
                 }});
  out.push_back({"cone.restrict_eff", "cone", "Eff(F1[3]) meets <H, B> in <B, H-1/2B> = Eff(P2[3])", false, [] {
                   const Fixture f = bundled("f1n3.json");
                   const Cone got = intersect_subspace(f.walls.bounding_cone, {Vec{1, 1, 0}, Vec{0, 0, 1}});
                   const Cone want = Cone::from_generators(2, {Vec{0, 1}, Vec{1, Rational(-1, 2)}});
                   const Fixture p2 = bundled("p2n3.json");
                   return all_of({got.same_as(want) ? "" : "restricted cone is not <B, H-1/2B>",
                                  got.same_as(p2.walls.bounding_cone) ? "" : "does not match the P2[3] cone"});
                 }});
  out.push_back({"cone.restrict_walls", "cone",
                 "F1[3] walls restricted to <H, B> are the P2[3] walls; the C_E[3] wall is dropped", false, [] {
                   const Fixture f = bundled("f1n3.json");
                   const Fixture p2 = bundled("p2n3.json");
                   const auto res = restrict_walls(f.walls, Subspace{{"H", "B"}, {Vec{1, 1, 0}, Vec{0, 0, 1}}});
                   const bool dropped_ce = res.dropped.size() == 1 && res.dropped[0].functional == Vec{-1, 1, 0};
                   return all_of({res.restricted.functionals() == p2.walls.functionals() ? "" : "wall lists differ",
                                  dropped_ce ? "" : "C_E[3] wall not the only dropped wall"});
                 }});
  out.push_back({"cone.plot_labels", "cone", "cross sections carry the labels B, H, F, X_{2,0}, X_{1,0} and B, H, X2, X1",
                 false, [] {
                   const std::string f1 = cross_section_svg(bundled("f1n3.json"));
                   const std::string p2 = cross_section_svg(bundled("p2n3.json"));
                   std::string err;
                   for (const char* l : {">B<", ">H<", ">F<", ">X_{2,0}<", ">X_{1,0}<"})
                     if (f1.find(l) == std::string::npos) err += std::string("F1 missing ") + l + " ";
                   for (const char* l : {">B<", ">H<", ">X2<", ">X1<"})
                     if (p2.find(l) == std::string::npos) err += std::string("P2 missing ") + l + " ";
                   return err;
                 }});
  return out;
}

std::vector<Entry> catalog() {
  std::vector<Entry> all;
  for (auto part : {p2_checks(), fr_checks(), k3_checks(), cone_checks()})
    all.insert(all.end(), part.begin(), part.end());
  return all;
}

}  // namespace

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Warn: return "WARN";
  }
  return "FAIL";
}

int ReproduceReport::count(Outcome o) const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [o](const CheckRecord& r) { return r.outcome == o; }));
}

const std::vector<std::string>& documented_warnings() {
  static const std::vector<std::string> w{"EQ_SEV_PLUS_ONE", "FR12_LIST_MISMATCH", "K3_SOLUTION_SET_MISMATCH"};
  return w;
}

const std::vector<std::string>& reproduce_tags() {
  static const std::vector<std::string> t{"p2", "fr", "k3", "cone"};
  return t;
}

ReproduceReport run_reproduce(const std::vector<std::string>& tags) {
  for (const auto& t : tags)
    if (std::find(reproduce_tags().begin(), reproduce_tags().end(), t) == reproduce_tags().end())
      throw std::invalid_argument("unknown reproduce filter '" + t + "'");
  ReproduceReport report;
  for (const auto& e : catalog()) {
    if (!tags.empty() && std::find(tags.begin(), tags.end(), e.tag) == tags.end()) continue;
    CheckRecord rec{e.id, e.tag, e.description, Outcome::Fail, ""};
    try {
      std::string detail = e.fn();
      if (e.warning) {
        rec.outcome = Outcome::Warn;
        rec.detail = std::move(detail);
      } else {
        rec.outcome = detail.empty() ? Outcome::Pass : Outcome::Fail;
        rec.detail = std::move(detail);
      }
    } catch (const std::exception& ex) {
      rec.detail = std::string("error: ") + ex.what();
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

std::string format_report(const ReproduceReport& r) {
  std::ostringstream os;
  for (const auto& rec : r.records) {
    os << '[' << to_string(rec.outcome) << "] " << rec.id << ": " << rec.description;
    if (!rec.detail.empty()) os << " -- " << rec.detail;
    os << '\n';
  }
  os << r.count(Outcome::Pass) << " passed, " << r.count(Outcome::Fail) << " failed, " << r.count(Outcome::Warn)
     << " warnings\n";
  return os.str();
}

json to_json(const ReproduceReport& r) {
  json records = json::array();
  for (const auto& rec : r.records)
    records.push_back({{"id", rec.id},
                       {"tag", rec.tag},
                       {"status", to_string(rec.outcome)},
                       {"description", rec.description},
                       {"detail", rec.detail}});
  return json{{"passed", r.count(Outcome::Pass)},
              {"failed", r.count(Outcome::Fail)},
              {"warnings", r.count(Outcome::Warn)},
              {"records", records}};
}

}  // namespace hilbcone
