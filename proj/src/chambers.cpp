#include "hilbcone/chambers.hpp"

#include "hilbcone/hilbpic.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hilbcone {

namespace {

constexpr std::size_t kMaxDim = 5;

bool vec_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_unique(std::vector<Vec>& vs) {
  std::sort(vs.begin(), vs.end(), vec_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// Basis of the row space of the given vectors.
std::vector<Vec> span_basis(const std::vector<Vec>& vs) {
  if (vs.empty()) return {};
  Mat m(vs.begin(), vs.end());
  const auto pivots = rref(m);
  return std::vector<Vec>(m.begin(), m.begin() + static_cast<long>(pivots.size()));
}

// Calls f on every k-subset of {0..n-1}.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

void Cone::check_dim(const Vec& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("cone: dimension mismatch");
}

Cone Cone::from_generators(std::size_t ambient_dim, const std::vector<Vec>& generators) {
  if (ambient_dim == 0 || ambient_dim > kMaxDim)
    throw std::invalid_argument("cone ambient dimension must be between 1 and 5");
  Cone c;
  c.ambient_dim_ = ambient_dim;
  std::vector<Vec> gens;
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw std::invalid_argument("cone generator has wrong dimension");
    if (is_zero(g)) throw std::invalid_argument("cone generator is zero");
    gens.push_back(primitive(g));
  }
  sort_unique(gens);

  const std::vector<Vec> span = span_basis(gens);
  const std::size_t k = span.size();
  c.dimension_ = k;

  // Equations: the orthogonal complement of the span.
  for (auto& e : nullspace(Mat(span.begin(), span.end()), ambient_dim)) c.equations_.push_back(primitive(e));
  sort_unique(c.equations_);

  // Facet candidates: for each (k-1)-subset of independent generators, the
  // unique direction inside the span orthogonal to it.
  if (k > 0) {
    for_each_subset(gens.size(), k - 1, [&](const std::vector<std::size_t>& subset) {
      std::vector<Vec> chosen;
      for (auto i : subset) chosen.push_back(gens[i]);
      if (rank(chosen) != k - 1) return;
      // f = sum_j c_j span_j with f . s = 0 for chosen s.
      Mat system;
      for (const auto& s : chosen) {
        Vec row;
        for (const auto& b : span) row.push_back(dot(b, s));
        system.push_back(std::move(row));
      }
      const auto coeffs = nullspace(system, k);
      if (coeffs.size() != 1) return;
      Vec f(ambient_dim, Rational(0));
      for (std::size_t j = 0; j < k; ++j) f = add(f, scale(coeffs[0][j], span[j]));
      bool pos = false;
      bool neg = false;
      for (const auto& g : gens) {
        const int s = dot(f, g).sign();
        pos = pos || s > 0;
        neg = neg || s < 0;
      }
      if (pos && neg) return;
      if (neg) f = scale(Rational(-1), f);
      c.facets_.push_back(primitive(f));
    });
  }
  sort_unique(c.facets_);

  if (c.is_pointed()) {
    std::vector<Vec> extreme;
    for (const auto& g : gens) {
      std::vector<Vec> tight;
      for (const auto& f : c.facets_)
        if (dot(f, g) == 0) tight.push_back(f);
      if (rank(tight) + 1 == k) extreme.push_back(g);
    }
    gens = std::move(extreme);
  }
  c.generators_ = std::move(gens);
  return c;
}

Cone Cone::from_inequalities(std::size_t ambient_dim, const std::vector<Vec>& inequalities,
                             const std::vector<Vec>& equations) {
  // The cone is the dual of D = cone(inequalities, +-equations); its
  // generators are the facets of D together with +- the equations of D.
  std::vector<Vec> dual_gens;
  for (const auto& f : inequalities) {
    if (f.size() != ambient_dim) throw std::invalid_argument("inequality has wrong dimension");
    if (!is_zero(f)) dual_gens.push_back(f);
  }
  for (const auto& e : equations) {
    if (e.size() != ambient_dim) throw std::invalid_argument("equation has wrong dimension");
    if (is_zero(e)) continue;
    dual_gens.push_back(e);
    dual_gens.push_back(scale(Rational(-1), e));
  }
  std::vector<Vec> gens;
  if (dual_gens.empty()) {
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      Vec v(ambient_dim, Rational(0));
      v[i] = 1;
      gens.push_back(v);
      v[i] = -1;
      gens.push_back(v);
    }
  } else {
    const Cone dual = from_generators(ambient_dim, dual_gens);
    gens = dual.facets();
    for (const auto& e : dual.equations()) {
      gens.push_back(e);
      gens.push_back(scale(Rational(-1), e));
    }
  }
  return from_generators(ambient_dim, gens);
}

bool Cone::is_pointed() const { return rank(facets_) == dimension_; }

bool Cone::contains(const Vec& v) const {
  check_dim(v);
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, v) < 0) return false;
  return true;
}

bool Cone::contains_interior(const Vec& v) const {
  check_dim(v);
  if (dimension_ == 0) return is_zero(v);
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, v) <= 0) return false;
  return true;
}

bool Cone::same_as(const Cone& other) const {
  if (ambient_dim_ != other.ambient_dim_ || dimension_ != other.dimension_) return false;
  for (const auto& g : generators_)
    if (!other.contains(g)) return false;
  for (const auto& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

Cone intersect_subspace(const Cone& cone, const std::vector<Vec>& basis) {
  const std::size_t dim = cone.ambient_dim();
  for (const auto& b : basis)
    if (b.size() != dim) throw std::invalid_argument("subspace basis has wrong dimension");
  if (basis.empty() || rank(basis) != basis.size())
    throw std::invalid_argument("subspace basis must be nonempty and linearly independent");

  std::vector<Vec> equations = cone.equations();
  for (const auto& e : nullspace(Mat(basis.begin(), basis.end()), dim)) equations.push_back(e);
  const Cone ambient = Cone::from_inequalities(dim, cone.facets(), equations);

  const Mat to_ambient = from_columns(basis);
  std::vector<Vec> coords;
  for (const auto& g : ambient.generators()) {
    auto y = solve(to_ambient, g, basis.size());
    if (!y) throw std::logic_error("intersect_subspace: generator left the subspace");
    coords.push_back(*y);
  }
  if (coords.empty()) {
    // The zero cone: cut out by every coordinate equation.
    std::vector<Vec> eqs;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Vec e(basis.size(), Rational(0));
      e[i] = 1;
      eqs.push_back(e);
    }
    return Cone::from_inequalities(basis.size(), {}, eqs);
  }
  return Cone::from_generators(basis.size(), coords);
}

const char* to_string(WallPosition p) {
  switch (p) {
    case WallPosition::Interior: return "interior";
    case WallPosition::ContainsCone: return "contains-cone";
    case WallPosition::BoundaryOnly: return "boundary-only";
  }
  return "?";
}

WallPosition classify_wall(const Cone& cone, const Vec& functional) {
  bool pos = false;
  bool neg = false;
  for (const auto& g : cone.generators()) {
    const int s = dot(functional, g).sign();
    pos = pos || s > 0;
    neg = neg || s < 0;
  }
  if (pos && neg) return WallPosition::Interior;
  if (!pos && !neg) return WallPosition::ContainsCone;
  return WallPosition::BoundaryOnly;
}

std::vector<Vec> WallSet::functionals() const {
  std::vector<Vec> out;
  for (const auto& w : walls) out.push_back(w.functional);
  sort_unique(out);
  return out;
}

WallSet make_wallset(std::string surface, int n, std::vector<std::string> coordinate_labels,
                     Cone bounding_cone, std::vector<Wall> walls) {
  if (coordinate_labels.size() != bounding_cone.ambient_dim())
    throw std::invalid_argument("wall set: labels do not match cone dimension");
  std::vector<Wall> kept;
  for (auto& w : walls) {
    if (w.functional.size() != bounding_cone.ambient_dim())
      throw std::invalid_argument("wall '" + w.label + "' has wrong dimension");
    if (is_zero(w.functional)) throw std::invalid_argument("wall '" + w.label + "' is zero");
    w.functional = primitive(w.functional);
    const bool duplicate = std::any_of(kept.begin(), kept.end(),
                                       [&](const Wall& k) { return k.functional == w.functional; });
    if (duplicate) continue;
    w.position = classify_wall(bounding_cone, w.functional);
    kept.push_back(std::move(w));
  }
  return WallSet{std::move(surface), n, std::move(coordinate_labels), std::move(bounding_cone),
                 std::move(kept)};
}

WallRestriction restrict_walls(const WallSet& walls, const Subspace& subspace) {
  if (subspace.labels.size() != subspace.basis.size())
    throw std::invalid_argument("subspace labels do not match basis");
  const Mat p = from_columns(subspace.basis);  // ambient x = p y
  const Mat pt = transpose(p);
  WallRestriction out{
      WallSet{walls.surface, walls.n, subspace.labels,
              intersect_subspace(walls.bounding_cone, subspace.basis), {}},
      {}};
  std::vector<Wall> restricted;
  for (const auto& w : walls.walls) {
    Vec f = mat_vec(pt, w.functional);
    if (is_zero(f)) {
      out.dropped.push_back(w);
      continue;
    }
    Wall r = w;
    r.functional = std::move(f);
    restricted.push_back(std::move(r));
  }
  out.restricted = make_wallset(walls.surface, walls.n, subspace.labels,
                                out.restricted.bounding_cone, std::move(restricted));
  return out;
}

WallSet transport_wallset_down(const WallSet& walls) {
  if (walls.surface.rfind("fr:", 0) != 0 || walls.coordinate_labels.size() != 3)
    throw std::invalid_argument("transport_wallset_down needs a wall set on a Hirzebruch surface");
  const int r1 = std::stoi(walls.surface.substr(3));
  if (r1 < 1) throw std::invalid_argument("transport_wallset_down: source is F_0, nothing below it");
  const int r = r1 - 1;
  // phi'(D) = phi(up(D)), so phi' = up^T phi.
  const Mat up_t = transpose(transport_up_matrix(r));
  const Mat down = transport_down_matrix(r);

  std::vector<Vec> gens;
  for (const auto& g : walls.bounding_cone.generators()) gens.push_back(mat_vec(down, g));
  Cone bounding = Cone::from_generators(3, gens);

  std::vector<Wall> moved;
  for (const auto& w : walls.walls) {
    Wall m = w;
    m.functional = mat_vec(up_t, w.functional);
    m.note = "unverified wall-hood";
    moved.push_back(std::move(m));
  }
  return make_wallset("fr:" + std::to_string(r), walls.n, walls.coordinate_labels, std::move(bounding),
                      std::move(moved));
}

std::vector<int> locate(const WallSet& walls, const Vec& v) {
  if (!walls.bounding_cone.contains(v))
    throw std::invalid_argument("locate: class lies outside the bounding cone");
  std::vector<int> signs;
  for (const auto& w : walls.walls) signs.push_back(dot(w.functional, v).sign());
  return signs;
}

}  // namespace hilbcone
