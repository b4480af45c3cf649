#include "hilbcone/nslattice.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hilbcone {

bool SurfaceClass::is_integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return is_integer(q); });
}

SurfaceClass operator+(const SurfaceClass& a, const SurfaceClass& b) {
  return SurfaceClass(add(a.coeffs, b.coeffs));
}

SurfaceClass operator-(const SurfaceClass& a, const SurfaceClass& b) {
  return SurfaceClass(sub(a.coeffs, b.coeffs));
}

SurfaceClass operator*(const Rational& s, const SurfaceClass& a) {
  return SurfaceClass(scale(s, a.coeffs));
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

SurfaceLattice::SurfaceLattice(std::vector<std::string> labels,
                               std::vector<std::vector<long long>> gram, SurfaceClass canonical,
                               long long chi_o,
                               std::optional<std::vector<SurfaceClass>> eff_generators,
                               SurfaceKind kind)
    : labels_(std::move(labels)),
      gram_(std::move(gram)),
      canonical_(std::move(canonical)),
      chi_o_(chi_o),
      eff_(std::move(eff_generators)),
      kind_(std::move(kind)) {
  const std::size_t n = labels_.size();
  if (gram_.size() != n) throw std::invalid_argument("gram size does not match basis");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw std::invalid_argument("gram is not square");
    for (std::size_t j = 0; j < n; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("gram is not symmetric");
  }
  if (canonical_.size() != n) throw std::invalid_argument("canonical class has wrong rank");
}

SurfaceClass SurfaceLattice::basis_vector(std::size_t i) const {
  Vec v(rank(), Rational(0));
  v.at(i) = 1;
  return SurfaceClass(std::move(v));
}

SurfaceClass SurfaceLattice::zero() const { return SurfaceClass(Vec(rank(), Rational(0))); }

SurfaceClass SurfaceLattice::make_class(const std::vector<long long>& coeffs) const {
  if (coeffs.size() != rank()) throw std::invalid_argument("class has wrong rank");
  Vec v;
  for (auto c : coeffs) v.emplace_back(c);
  return SurfaceClass(std::move(v));
}

SurfaceClass SurfaceLattice::named(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return basis_vector(i);
  for (const auto& [name, cls] : derived_)
    if (name == label) return cls;
  throw std::invalid_argument("unknown class label '" + label + "' on " + spec());
}

std::string SurfaceLattice::spec() const {
  switch (kind_.tag) {
    case SurfaceKindTag::P2: return "p2";
    case SurfaceKindTag::Hirzebruch: return "fr:" + std::to_string(kind_.param);
    case SurfaceKindTag::K3: return "k3:" + std::to_string(kind_.param);
    case SurfaceKindTag::Blowup:
      return "blowup:" + kind_.parent->spec() + ":" + std::to_string(kind_.param);
  }
  return "?";
}

bool SurfaceLattice::same_as(const SurfaceLattice& other) const {
  return labels_ == other.labels_ && gram_ == other.gram_ && canonical_ == other.canonical_ &&
         spec() == other.spec();
}

void SurfaceLattice::add_derived(std::string label, SurfaceClass cls) {
  if (cls.size() != rank()) throw std::invalid_argument("derived class has wrong rank");
  derived_.emplace_back(std::move(label), std::move(cls));
}

SurfaceLattice make_p2() {
  SurfaceKind kind{SurfaceKindTag::P2, 0, nullptr};
  SurfaceLattice s({"H"}, {{1}}, SurfaceClass(Vec{Rational(-3)}), 1,
                   std::vector<SurfaceClass>{SurfaceClass(Vec{Rational(1)})}, kind);
  return s;
}

SurfaceLattice make_hirzebruch(int r) {
  if (r < 0) throw std::invalid_argument("Hirzebruch index must be nonnegative");
  SurfaceKind kind{SurfaceKindTag::Hirzebruch, r, nullptr};
  SurfaceLattice s({"E", "F"}, {{-r, 1}, {1, 0}}, SurfaceClass(Vec{Rational(-2), Rational(-(r + 2))}),
                   1,
                   std::vector<SurfaceClass>{SurfaceClass(Vec{Rational(1), Rational(0)}),
                                             SurfaceClass(Vec{Rational(0), Rational(1)})},
                   kind);
  s.add_derived("H", SurfaceClass(Vec{Rational(1), Rational(r)}));
  return s;
}

namespace {

int next_exceptional_index(const std::vector<std::string>& labels) {
  int max_index = 0;
  for (const auto& l : labels) {
    if (l.size() < 2 || l[0] != 'E') continue;
    if (!std::all_of(l.begin() + 1, l.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      continue;
    max_index = std::max(max_index, std::stoi(l.substr(1)));
  }
  return max_index + 1;
}

SurfaceClass extend_zero(const SurfaceClass& c, std::size_t extra) {
  Vec v = c.coeffs;
  v.resize(v.size() + extra, Rational(0));
  return SurfaceClass(std::move(v));
}

}  // namespace

SurfaceLattice blow_up(const SurfaceLattice& s, int k) {
  if (k < 1) throw std::invalid_argument("blow_up needs at least one point");
  const std::size_t old_rank = s.rank();
  const std::size_t new_rank = old_rank + static_cast<std::size_t>(k);

  auto labels = s.basis_labels();
  const int first = next_exceptional_index(labels);
  for (int i = 0; i < k; ++i) labels.push_back("E" + std::to_string(first + i));

  std::vector<std::vector<long long>> gram(new_rank, std::vector<long long>(new_rank, 0));
  for (std::size_t i = 0; i < old_rank; ++i)
    for (std::size_t j = 0; j < old_rank; ++j) gram[i][j] = s.gram()[i][j];
  for (std::size_t i = old_rank; i < new_rank; ++i) gram[i][i] = -1;

  SurfaceClass canonical = extend_zero(s.canonical(), static_cast<std::size_t>(k));
  for (std::size_t i = old_rank; i < new_rank; ++i) canonical.coeffs[i] = 1;

  SurfaceKind kind{SurfaceKindTag::Blowup, k, std::make_shared<const SurfaceLattice>(s)};
  SurfaceLattice out(std::move(labels), std::move(gram), std::move(canonical), s.chi_o(),
                     std::nullopt, std::move(kind));
  for (const auto& [name, cls] : s.derived_classes())
    out.add_derived(name, extend_zero(cls, static_cast<std::size_t>(k)));
  return out;
}

SurfaceLattice make_k3(int deg) {
  if (deg != 4 && deg != 6 && deg != 8)
    throw std::invalid_argument("K3 degree must be 4, 6 or 8");
  SurfaceKind kind{SurfaceKindTag::K3, deg, nullptr};
  return SurfaceLattice({"L"}, {{deg}}, SurfaceClass(Vec{Rational(0)}), 2,
                        std::vector<SurfaceClass>{SurfaceClass(Vec{Rational(1)})}, kind);
}

namespace {

int parse_int(const std::string& text, const std::string& whole) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '-';
      }))
    throw std::invalid_argument("bad surface spec '" + whole + "'");
  try {
    return std::stoi(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad surface spec '" + whole + "'");
  }
}

}  // namespace

SurfaceLattice parse_surface_spec(const std::string& spec) {
  if (spec == "p2") return make_p2();
  if (spec.rfind("fr:", 0) == 0) return make_hirzebruch(parse_int(spec.substr(3), spec));
  if (spec.rfind("k3:", 0) == 0) return make_k3(parse_int(spec.substr(3), spec));
  if (spec.rfind("blowup:", 0) == 0) {
    const std::string rest = spec.substr(7);
    const auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad surface spec '" + spec + "'");
    return blow_up(parse_surface_spec(rest.substr(0, colon)), parse_int(rest.substr(colon + 1), spec));
  }
  throw std::invalid_argument("bad surface spec '" + spec + "'");
}

Mat gram_matrix(const SurfaceLattice& s) {
  Mat g;
  for (const auto& row : s.gram()) {
    Vec r;
    for (auto x : row) r.emplace_back(x);
    g.push_back(std::move(r));
  }
  return g;
}

Rational pair(const SurfaceLattice& s, const SurfaceClass& c, const SurfaceClass& d) {
  if (c.size() != s.rank() || d.size() != s.rank())
    throw std::invalid_argument("pair: class rank does not match lattice " + s.spec());
  Rational total = 0;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < s.rank(); ++j) {
      const long long g = s.gram()[i][j];
      if (g != 0) total += c[i] * g * d[j];
    }
  }
  return total;
}

Rational self_intersection(const SurfaceLattice& s, const SurfaceClass& c) { return pair(s, c, c); }

Rational arithmetic_genus(const SurfaceLattice& s, const SurfaceClass& c) {
  return 1 + (pair(s, c, c) + pair(s, c, s.canonical())) / 2;
}

Rational chi(const SurfaceLattice& s, const SurfaceClass& c) {
  return s.chi_o() + (pair(s, c, c) - pair(s, c, s.canonical())) / 2;
}

Integer h0_hirzebruch(long long r, long long a, long long b) {
  if (a < 0) throw std::invalid_argument("h0_hirzebruch: a must be nonnegative");
  Integer total = 0;
  for (long long i = 0; i <= a; ++i) {
    const long long term = b - i * r + 1;
    if (term > 0) total += term;
  }
  return total;
}

Integer h0_p2(long long d) {
  if (d < 0) return 0;
  return Integer(d + 1) * (d + 2) / 2;
}

std::optional<Integer> h0(const SurfaceLattice& s, const SurfaceClass& c) {
  if (!c.is_integral() || c.size() != s.rank()) return std::nullopt;
  switch (s.kind().tag) {
    case SurfaceKindTag::P2: return h0_p2(to_int64(c[0]));
    case SurfaceKindTag::Hirzebruch: {
      const long long a = to_int64(c[0]);
      const long long b = to_int64(c[1]);
      if (a < 0 || b < 0) return Integer(0);
      return h0_hirzebruch(s.kind().param, a, b);
    }
    case SurfaceKindTag::K3: {
      const long long d = to_int64(c[0]);
      if (d < 0) return Integer(0);
      if (d == 0) return Integer(1);
      // Kodaira vanishing for the ample class dL.
      return Integer(2) + Integer(s.kind().param) * d * d / 2;
    }
    case SurfaceKindTag::Blowup: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Vec> coordinates_in(const SurfaceClass& c, const std::vector<SurfaceClass>& basis) {
  std::vector<Vec> cols;
  for (const auto& b : basis) {
    if (b.size() != c.size()) throw std::invalid_argument("coordinates_in: rank mismatch");
    cols.push_back(b.coeffs);
  }
  const Mat m = from_columns(cols);
  if (m.empty()) return is_zero(c.coeffs) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve(m, c.coeffs, basis.size());
}

Tri effectivity(const SurfaceLattice& s, const SurfaceClass& c) {
  const auto& gens = s.eff_generators();
  if (!gens) return Tri::Unknown;
  std::vector<Vec> rows;
  for (const auto& g : *gens) rows.push_back(g.coeffs);
  if (gens->size() != s.rank() || rank(rows) != s.rank()) return Tri::Unknown;
  const auto coords = coordinates_in(c, *gens);
  if (!coords) return Tri::No;
  for (const auto& x : *coords)
    if (x < 0) return Tri::No;
  return Tri::Yes;
}

std::pair<int, int> signature(const SurfaceLattice& s) {
  Mat a = gram_matrix(s);
  const std::size_t n = a.size();
  int pos = 0;
  int neg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t j = k + 1;
      while (j < n && a[j][j] == 0) ++j;
      if (j < n) {
        std::swap(a[k], a[j]);
        for (auto& row : a) std::swap(row[k], row[j]);
      } else {
        j = k + 1;
        while (j < n && a[k][j] == 0) ++j;
        if (j == n) continue;  // row k is zero: a null direction
        // Replace e_k by e_k + e_j; the new diagonal entry is 2 a_kj != 0.
        for (std::size_t c = 0; c < n; ++c) a[k][c] += a[j][c];
        for (std::size_t r = 0; r < n; ++r) a[r][k] += a[r][j];
      }
    }
    const Rational pivot = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / pivot;
      for (std::size_t c = 0; c < n; ++c) a[i][c] -= f * a[k][c];
      for (std::size_t r = 0; r < n; ++r) a[r][i] -= f * a[r][k];
    }
    if (pivot > 0) ++pos;
    if (pivot < 0) ++neg;
  }
  return {pos, neg};
}

IntMat3 roof_basis_change(int r) {
  if (r < 0) throw std::invalid_argument("roof_basis_change: r must be nonnegative");
  // Rows index (p1*E, p1*F, e); columns (p2*E_{r+1}, p2*F, f~).
  //   p2*E_{r+1} = p1*E - e,  p2*F = p1*F,  f~ = p1*F - e.
  return IntMat3{{{1, 0, 0}, {0, 1, 1}, {-1, 0, -1}}};
}

Mat to_rational(const IntMat3& m) {
  Mat out;
  for (const auto& row : m) {
    Vec r;
    for (auto x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

SurfaceClass pullback_to_blowup(const SurfaceLattice& blowup, const SurfaceLattice& source,
                                const SurfaceClass& c) {
  if (blowup.same_as(source)) return c;
  if (blowup.kind().tag != SurfaceKindTag::Blowup)
    throw std::invalid_argument("pullback: " + blowup.spec() + " is not a blowup of " + source.spec());
  const SurfaceLattice& parent = *blowup.kind().parent;
  const SurfaceClass on_parent = pullback_to_blowup(parent, source, c);
  return extend_zero(on_parent, blowup.rank() - parent.rank());
}

SurfaceClass pushforward_from_blowup(const SurfaceLattice& blowup, const SurfaceClass& c) {
  if (blowup.kind().tag != SurfaceKindTag::Blowup)
    throw std::invalid_argument("pushforward: " + blowup.spec() + " is not a blowup");
  if (c.size() != blowup.rank()) throw std::invalid_argument("pushforward: rank mismatch");
  const std::size_t parent_rank = blowup.kind().parent->rank();
  return SurfaceClass(Vec(c.coeffs.begin(), c.coeffs.begin() + static_cast<long>(parent_rank)));
}

}  // namespace hilbcone
