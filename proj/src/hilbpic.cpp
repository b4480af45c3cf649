#include "hilbcone/hilbpic.hpp"

#include <stdexcept>

namespace hilbcone {

Vec HilbDivClass::to_vector() const {
  Vec v = surface_part.coeffs;
  v.push_back(b_coeff);
  return v;
}

HilbDivClass HilbDivClass::from_vector(const Vec& v, int n) {
  if (v.empty()) throw std::invalid_argument("from_vector: empty vector");
  return HilbDivClass{SurfaceClass(Vec(v.begin(), v.end() - 1)), v.back(), n};
}

namespace {

void check_same_n(const HilbDivClass& a, const HilbDivClass& b) {
  if (a.n != b.n) throw std::invalid_argument("classes live on different Hilbert schemes");
}

const SurfaceLattice& require_hirzebruch(const SurfaceLattice& s) {
  if (s.kind().tag != SurfaceKindTag::Hirzebruch)
    throw std::invalid_argument("expected a Hirzebruch surface, got " + s.spec());
  return s;
}

}  // namespace

HilbDivClass operator+(const HilbDivClass& a, const HilbDivClass& b) {
  check_same_n(a, b);
  return {a.surface_part + b.surface_part, a.b_coeff + b.b_coeff, a.n};
}

HilbDivClass operator-(const HilbDivClass& a, const HilbDivClass& b) {
  check_same_n(a, b);
  return {a.surface_part - b.surface_part, a.b_coeff - b.b_coeff, a.n};
}

HilbDivClass operator*(const Rational& s, const HilbDivClass& a) {
  return {s * a.surface_part, s * a.b_coeff, a.n};
}

Vec HilbCurveClass::to_vector() const {
  Vec v = dual_surface_values;
  v.push_back(b_value);
  return v;
}

HilbDivClass lift_divisor(const SurfaceLattice& s, const SurfaceClass& d, int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (d.size() != s.rank()) throw std::invalid_argument("lift_divisor: rank mismatch");
  return {d, Rational(0), n};
}

HilbDivClass exceptional_divisor(const SurfaceLattice& s, int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return {s.zero(), Rational(1), n};
}

bool is_pic_integral(const HilbDivClass& d) {
  return d.surface_part.is_integral() && is_integer(2 * d.b_coeff);
}

HilbCurveClass curve_from_divisor(const SurfaceLattice& s, const SurfaceClass& d0, int n,
                                  std::string label) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  Vec values;
  for (std::size_t i = 0; i < s.rank(); ++i) values.push_back(pair(s, d0, s.basis_vector(i)));
  return {std::move(values), Rational(0), n, std::move(label)};
}

HilbCurveClass gamma2(const SurfaceLattice& s, int n) {
  if (n < 2) throw std::invalid_argument("gamma2 needs n >= 2");
  return {Vec(s.rank(), Rational(0)), Rational(-2), n, "gamma2"};
}

HilbCurveClass curve_from_pairings(Vec values, Rational b_value, int n, std::string label) {
  return {std::move(values), std::move(b_value), n, std::move(label)};
}

Rational pair(const HilbCurveClass& c, const HilbDivClass& d) {
  if (c.dual_surface_values.size() != d.surface_part.size())
    throw std::invalid_argument("pair: curve and divisor live on different lattices");
  if (c.n != d.n) throw std::invalid_argument("pair: curve and divisor have different n");
  return dot(c.dual_surface_values, d.surface_part.coeffs) + c.b_value * d.b_coeff;
}

HilbDivClass pullback_blowup_hilb(const HilbDivClass& d, const SurfaceLattice& source,
                                  const SurfaceLattice& target) {
  if (d.surface_part.size() != source.rank())
    throw std::invalid_argument("pullback_blowup_hilb: class does not live on " + source.spec());
  if (target.kind().tag != SurfaceKindTag::Blowup)
    throw std::invalid_argument("pullback_blowup_hilb: " + target.spec() + " is not a blowup");
  return {pullback_to_blowup(target, source, d.surface_part), d.b_coeff, d.n};
}

HilbDivClass transport_up(const SurfaceLattice& fr, const HilbDivClass& d) {
  const int r = require_hirzebruch(fr).kind().param;
  if (d.surface_part.size() != 2) throw std::invalid_argument("transport_up: rank mismatch");
  // p1^*: total transform into Bl_1(F_r), basis (p1*E, p1*F, e).
  const SurfaceLattice roof_low = blow_up(fr, 1);
  const SurfaceClass on_roof = pullback_to_blowup(roof_low, fr, d.surface_part);
  // Rewrite in the p2 basis (p2*E_{r+1}, p2*F, f~) = Bl_1(F_{r+1}).
  const Mat to_p2 = inverse(to_rational(roof_basis_change(r)));
  const SurfaceClass in_p2(mat_vec(to_p2, on_roof.coeffs));
  // p2_*: forget the exceptional curve f~.
  const SurfaceLattice roof_high = blow_up(make_hirzebruch(r + 1), 1);
  return {pushforward_from_blowup(roof_high, in_p2), d.b_coeff, d.n};
}

HilbDivClass transport_down(const SurfaceLattice& fr1, const HilbDivClass& d) {
  const int r1 = require_hirzebruch(fr1).kind().param;
  if (r1 < 1) throw std::invalid_argument("transport_down: source must be F_{r+1} with r >= 0");
  if (d.surface_part.size() != 2) throw std::invalid_argument("transport_down: rank mismatch");
  const int r = r1 - 1;
  const SurfaceLattice roof_high = blow_up(fr1, 1);
  const SurfaceClass on_roof = pullback_to_blowup(roof_high, fr1, d.surface_part);
  const Mat to_p1 = to_rational(roof_basis_change(r));
  const SurfaceClass in_p1(mat_vec(to_p1, on_roof.coeffs));
  const SurfaceLattice roof_low = blow_up(make_hirzebruch(r), 1);
  return {pushforward_from_blowup(roof_low, in_p1), d.b_coeff, d.n};
}

namespace {

Mat transport_matrix(const SurfaceLattice& source, bool up) {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < 3; ++i) {
    Vec e(3, Rational(0));
    e[i] = 1;
    const HilbDivClass d = HilbDivClass::from_vector(e, 1);
    cols.push_back((up ? transport_up(source, d) : transport_down(source, d)).to_vector());
  }
  return from_columns(cols);
}

}  // namespace

Mat transport_up_matrix(int r) { return transport_matrix(make_hirzebruch(r), true); }

Mat transport_down_matrix(int r) { return transport_matrix(make_hirzebruch(r + 1), false); }

Rational slope_decompose(const HilbDivClass& d, const HilbDivClass& j, const HilbDivClass& h) {
  if (d.b_coeff == 0 || j.b_coeff == 0)
    throw std::invalid_argument("slope_decompose: D and J need nonzero B-coefficients");
  if (h.b_coeff != 0) throw std::invalid_argument("slope_decompose: H must have zero B-coefficient");
  const HilbDivClass rest = (j.b_coeff / d.b_coeff) * d - j;
  const auto t = coordinates_in(rest.surface_part, {h.surface_part});
  if (!t) throw std::invalid_argument("slope_decompose: difference is not a multiple of H");
  return (*t)[0];
}

std::string format_vector(const std::vector<std::string>& labels, const Vec& v) {
  if (labels.size() != v.size()) throw std::invalid_argument("format_vector: size mismatch");
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational& c = v[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (negative) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (mag != 1) out += to_string(mag);
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

std::string format_class(const SurfaceLattice& s, const HilbDivClass& d) {
  auto labels = s.basis_labels();
  labels.push_back("B");
  return format_vector(labels, d.to_vector());
}

}  // namespace hilbcone
