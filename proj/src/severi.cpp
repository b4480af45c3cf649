#include "hilbcone/severi.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilbcone {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

bool SeveriResult::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

std::string SeveriResult::class_text() const {
  auto labels = basis_labels;
  labels.push_back("B");
  return format_vector(labels, cls.to_vector());
}

namespace {

const Rational kSeveriB = Rational(-5) / 2;

CheckStatus verdict(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

void add_flag(SeveriResult& r, const char* f) {
  if (!r.has_flag(f)) r.flags.emplace_back(f);
}

// Shared bookkeeping: a failed check always shows up as a flag.
void finish_flags(SeveriResult& r) {
  if (r.checks.dimension_equation.status == CheckStatus::Fail) add_flag(r, flags::kDimEquationFail);
  if (r.checks.genus_bound == CheckStatus::Fail) add_flag(r, flags::kGenusBoundFail);
  if (r.checks.k3c_effective == Tri::No) add_flag(r, flags::kK3cNotEffective);
  if (r.checks.k3c_effective == Tri::Unknown) add_flag(r, flags::kK3cUnknown);
  if (r.checks.expected_dim_condition == CheckStatus::Fail) add_flag(r, flags::kExpectedDimFail);
}

SeveriResult base_result(const SurfaceLattice& s, HilbDivClass cls) {
  SeveriResult r;
  r.surface = s.spec();
  r.basis_labels = s.basis_labels();
  r.cls = std::move(cls);
  return r;
}

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("node count n must be at least 1");
}

void p2_hypothesis_flags(SeveriResult& r, long long d, long long n) {
  if (d < 7) add_flag(r, flags::kDegreeBelow7);
  if (d == 6 && n == 9) add_flag(r, flags::kTregerException);
}

}  // namespace

SeveriResult severi_class_general(const SurfaceLattice& s, const SurfaceClass& c, int n,
                                  std::optional<Integer> h0_override) {
  check_n(n);
  if (c.size() != s.rank()) throw std::invalid_argument("curve class rank does not match surface");
  std::optional<Integer> sections = h0_override ? h0_override : h0(s, c);
  if (!sections)
    throw std::invalid_argument("h0 of the curve class on " + s.spec() +
                                " is not computable; supply it explicitly");

  const SurfaceClass k3c = s.canonical() + Rational(3) * c;
  SeveriResult r = base_result(s, {k3c, kSeveriB, n});

  auto& dim = r.checks.dimension_equation;
  dim.lhs = Rational(*sections) - 1;
  dim.rhs = Rational(3 * n - 1);
  dim.equation = "h0 - 1 = 3n - 1";
  dim.status = verdict(dim.lhs == dim.rhs);

  r.checks.k3c_effective = effectivity(s, k3c);
  r.checks.arithmetic_genus = arithmetic_genus(s, c);
  r.checks.genus_bound = verdict(Rational(n) <= r.checks.arithmetic_genus);
  if (s.kind().tag == SurfaceKindTag::Hirzebruch) {
    r.checks.expected_dim_condition = verdict(c[1] >= s.kind().param * c[0]);
  }
  if (s.kind().tag == SurfaceKindTag::P2 && c.is_integral()) {
    p2_hypothesis_flags(r, to_int64(c[0]), n);
  }
  finish_flags(r);
  return r;
}

SeveriResult severi_class_p2(long long d, int n, int codim) {
  check_n(n);
  if (d < 1) throw std::invalid_argument("degree d must be at least 1");
  if (codim < 0) throw std::invalid_argument("codimension must be nonnegative");
  const SurfaceLattice p2 = make_p2();
  SeveriResult r = base_result(p2, {p2.make_class({3 * d - 3}), kSeveriB, n});

  auto& dim = r.checks.dimension_equation;
  dim.lhs = Rational(h0_p2(d));
  dim.rhs = Rational(3LL * n + codim);
  dim.equation = "C(d+2,2) = 3n + r";
  dim.status = verdict(dim.lhs == dim.rhs);
  if (codim > 0) {
    dim.equation += " (alternative convention: 3n + r + 1)";
    add_flag(r, flags::kEqSevPlusOne);
  }
  r.checks.k3c_effective = 3 * d - 6 >= 0 ? Tri::Yes : Tri::No;
  r.checks.arithmetic_genus = arithmetic_genus(p2, p2.make_class({d}));
  r.checks.genus_bound = verdict(Rational(n) <= r.checks.arithmetic_genus);
  p2_hypothesis_flags(r, d, n);
  finish_flags(r);
  return r;
}

SeveriResult severi_class_subcollection(long long d, int n, int m, int l) {
  if (n < 2) throw std::invalid_argument("subcollection variant needs n >= 2");
  if (m < n) throw std::invalid_argument("subcollection variant needs m >= n");
  if (d < 1) throw std::invalid_argument("degree d must be at least 1");
  if (l < 0) throw std::invalid_argument("codimension must be nonnegative");
  const SurfaceLattice p2 = make_p2();
  const Integer h_mult = binomial(m - 1, n - 1);
  const Integer b_mult = binomial(m - 2, n - 2);
  const Rational h_coeff = Rational(h_mult) * (3 * d - 3);
  SeveriResult r = base_result(p2, {SurfaceClass(Vec{h_coeff}), Rational(b_mult) * kSeveriB, m});
  r.ray = HilbDivClass{SurfaceClass(Vec{Rational(m - 1, n - 1) * (3 * d - 3)}), kSeveriB, m};

  auto& dim = r.checks.dimension_equation;
  dim.lhs = Rational(h0_p2(d));
  dim.rhs = Rational(3LL * n + l);
  dim.equation = "C(d+2,2) = 3n + l";
  dim.status = verdict(dim.lhs == dim.rhs);
  r.checks.k3c_effective = 3 * d - 6 >= 0 ? Tri::Yes : Tri::No;
  r.checks.arithmetic_genus = arithmetic_genus(p2, p2.make_class({d}));
  r.checks.genus_bound = verdict(Rational(n) <= r.checks.arithmetic_genus);
  p2_hypothesis_flags(r, d, n);
  finish_flags(r);
  return r;
}

SeveriResult severi_class_hirzebruch(long long r, long long a, long long b, int n) {
  check_n(n);
  if (r < 0) throw std::invalid_argument("Hirzebruch index must be nonnegative");
  if (a < 0 || b < 0) throw std::invalid_argument("curve class aE+bF needs a, b >= 0");
  const SurfaceLattice fr = make_hirzebruch(static_cast<int>(r));
  const SurfaceClass c = fr.make_class({a, b});
  SeveriResult res = base_result(fr, {fr.make_class({3 * a - 2, 3 * b - r - 2}), kSeveriB, n});

  auto& dim = res.checks.dimension_equation;
  dim.lhs = Rational((a + 1) * (b + 1)) - Rational(r * (a * a + a), 2);
  dim.rhs = Rational(3LL * n);
  dim.equation = "(a+1)(b+1) - (r/2)(a^2+a) = 3n";
  dim.status = verdict(dim.lhs == dim.rhs);
  if (h0_hirzebruch(r, a, b) != Integer(3LL * n)) add_flag(res, flags::kH0Ne3n);

  res.checks.expected_dim_condition = verdict(b >= a * r);
  res.checks.k3c_effective = (3 * a - 2 >= 0 && 3 * b - r - 2 >= 0) ? Tri::Yes : Tri::No;
  res.checks.arithmetic_genus = arithmetic_genus(fr, c);
  res.checks.genus_bound = verdict(Rational(n) <= res.checks.arithmetic_genus);
  finish_flags(res);
  return res;
}

RamificationReport ramification_report(const SurfaceLattice& s, const SurfaceClass& c, int n,
                                       std::optional<SurfaceClass> sweep) {
  const SeveriResult sev = severi_class_general(s, c, n);
  std::string sweep_name;
  if (!sweep) {
    if (s.kind().tag == SurfaceKindTag::Hirzebruch) {
      sweep = s.named("F");
      sweep_name = "F";
    } else {
      sweep = s.basis_vector(0);
      sweep_name = s.basis_labels()[0];
    }
  } else {
    sweep_name = format_vector(s.basis_labels(), sweep->coeffs);
  }
  const HilbCurveClass g1 = curve_from_divisor(s, *sweep, n, "gamma1");
  const HilbCurveClass g2 = gamma2(s, n);
  return {pair(g1, sev.cls), pair(g2, sev.cls), sweep_name};
}

std::vector<P2Candidate> enumerate_p2(long long n) {
  std::vector<P2Candidate> out;
  if (n < 1) return out;
  for (long long d = 1;; ++d) {
    const Integer h = h0_p2(d);
    if (h > Integer(3) * n) break;
    if (h == Integer(3) * n) out.push_back({d, n, d >= 7, d == 6 && n == 9});
  }
  return out;
}

std::optional<long long> enumerate_p2_by_d(long long d) {
  if (d < 1) return std::nullopt;
  const Integer h = h0_p2(d);
  if (h % 3 != 0) return std::nullopt;
  return static_cast<long long>(h / 3);
}

const char* to_string(HirzFilter f) {
  switch (f) {
    case HirzFilter::Chi: return "chi";
    case HirzFilter::H0Exact: return "h0_exact";
    case HirzFilter::Genus: return "genus";
    case HirzFilter::ExpectedDim: return "expected_dim";
    case HirzFilter::K3cEffective: return "k3c_effective";
    case HirzFilter::Ample: return "ample";
    case HirzFilter::NonAmple: return "non_ample";
  }
  return "?";
}

const std::vector<HirzFilter>& all_hirz_filters() {
  static const std::vector<HirzFilter> all{HirzFilter::Chi,         HirzFilter::H0Exact,
                                           HirzFilter::Genus,       HirzFilter::ExpectedDim,
                                           HirzFilter::K3cEffective, HirzFilter::Ample,
                                           HirzFilter::NonAmple};
  return all;
}

HirzFilter parse_hirz_filter(const std::string& name) {
  for (auto f : all_hirz_filters())
    if (name == to_string(f)) return f;
  throw std::invalid_argument("unknown filter '" + name + "'");
}

bool HirzCandidate::passes(const std::vector<HirzFilter>& filters) const {
  return std::all_of(filters.begin(), filters.end(), [&](HirzFilter f) { return verdicts.at(f); });
}

std::vector<HirzCandidate> HirzebruchEnumeration::selected() const {
  std::vector<HirzCandidate> out;
  for (const auto& c : candidates)
    if (c.passes(filters)) out.push_back(c);
  return out;
}

HirzebruchEnumeration enumerate_hirzebruch(long long r, long long n, std::vector<HirzFilter> filters) {
  if (n < 1) throw std::invalid_argument("enumerate_hirzebruch needs n >= 1");
  if (r < 0) throw std::invalid_argument("Hirzebruch index must be nonnegative");
  HirzebruchEnumeration out{r, n, std::move(filters), {}};
  const SurfaceLattice fr = make_hirzebruch(static_cast<int>(r));
  // (a+1) * (2(b+1) - r a) = 6n, so a+1 runs over the divisors of 6n.
  const long long six_n = 6 * n;
  for (long long q = 1; q <= six_n; ++q) {
    if (six_n % q != 0) continue;
    const long long a = q - 1;
    const long long twice_b_plus_1 = six_n / q + r * a;
    if (twice_b_plus_1 % 2 != 0) continue;
    const long long b = twice_b_plus_1 / 2 - 1;
    if (b < 0) continue;

    HirzCandidate c{a, b, {}};
    const SurfaceClass cls = fr.make_class({a, b});
    c.verdicts[HirzFilter::Chi] = chi(fr, cls) == Rational(3 * n);
    c.verdicts[HirzFilter::H0Exact] = h0_hirzebruch(r, a, b) == Integer(3 * n);
    c.verdicts[HirzFilter::Genus] = Rational(n) <= arithmetic_genus(fr, cls);
    c.verdicts[HirzFilter::ExpectedDim] = b >= a * r;
    c.verdicts[HirzFilter::K3cEffective] = 3 * a - 2 >= 0 && 3 * b - r - 2 >= 0;
    c.verdicts[HirzFilter::Ample] = a > 0 && b > a * r;
    c.verdicts[HirzFilter::NonAmple] = !c.verdicts[HirzFilter::Ample];
    out.candidates.push_back(std::move(c));
  }
  return out;
}

K3Enumeration enumerate_k3(int deg, long long n_max) {
  const SurfaceLattice k3 = make_k3(deg);
  K3Enumeration out{deg, n_max, {}, {}};
  for (long long d = 1;; ++d) {
    const Integer lhs = Integer(deg) * d * d / 2 + 2;
    if (lhs > Integer(3) * n_max) break;
    if (lhs % 3 != 0) continue;
    const long long n = static_cast<long long>(lhs / 3);
    K3Candidate c;
    c.d = d;
    c.n = n;
    c.arithmetic_genus = arithmetic_genus(k3, k3.make_class({d}));
    c.genus_ok = Rational(n) <= c.arithmetic_genus;
    // The published claim for the degree 8 family is the single pair (1, 2).
    if (deg == 8 && !(d == 1 && n == 2)) c.flags.emplace_back(flags::kK3ExtraSolution);
    out.solutions.push_back(std::move(c));
  }
  if (deg == 4 && out.solutions.empty()) out.flags.emplace_back(flags::kK3Deg4NoSolutions);
  if (deg == 8 && out.solutions.size() > 1) out.flags.emplace_back(flags::kK3Deg8NotUnique);
  return out;
}

ImposingWall imposing_wall(long long d) {
  if (((d % 5) + 5) % 5 != 1) throw std::invalid_argument("imposing_wall needs d = 1 mod 5");
  if (d < 1) throw std::invalid_argument("degree d must be positive");
  const Integer k = Integer(3 * d - 3) / 5;
  const long long n = std::max<long long>(1, static_cast<long long>(h0_p2(d) / 3));
  return {k, HilbDivClass{SurfaceClass(Vec{Rational(k)}), Rational(-1, 2), static_cast<int>(n)}};
}

}  // namespace hilbcone
