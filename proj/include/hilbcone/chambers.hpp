#pragma once

// Exact rational polyhedral cones and finite sets of linear walls in N^1.
//
// A cone keeps three derived lists, all primitive-integral and sorted:
//   generators  extreme rays when the cone is pointed, otherwise the deduped
//               input rays;
//   facets      functionals f with f.x >= 0 on the cone, taken inside the
//               linear span so that each one is unique up to positive scale;
//   equations   functionals cutting out the linear span.

#include "hilbcone/linalg.hpp"

#include <string>
#include <vector>

namespace hilbcone {

class Cone {
 public:
  Cone() = default;
  /// Throws std::invalid_argument on a zero or wrongly sized generator, or
  /// when dim > 5.
  static Cone from_generators(std::size_t ambient_dim, const std::vector<Vec>& generators);
  /// {x : f.x >= 0 for f in inequalities, e.x = 0 for e in equations}.
  static Cone from_inequalities(std::size_t ambient_dim, const std::vector<Vec>& inequalities,
                                const std::vector<Vec>& equations = {});

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<Vec>& generators() const { return generators_; }
  const std::vector<Vec>& facets() const { return facets_; }
  const std::vector<Vec>& equations() const { return equations_; }
  bool is_pointed() const;

  bool contains(const Vec& v) const;
  /// Interior relative to the linear span of the cone.
  bool contains_interior(const Vec& v) const;

  /// Same point set (mutual containment of generators).
  bool same_as(const Cone& other) const;

 private:
  void check_dim(const Vec& v) const;

  std::size_t ambient_dim_ = 0;
  std::size_t dimension_ = 0;
  std::vector<Vec> generators_;
  std::vector<Vec> facets_;
  std::vector<Vec> equations_;
};

/// Cone of {v in span(basis) : v in cone}, in basis coordinates.
Cone intersect_subspace(const Cone& cone, const std::vector<Vec>& basis);

enum class WallPosition { Interior, ContainsCone, BoundaryOnly };
const char* to_string(WallPosition p);

/// Where the hyperplane f = 0 meets the cone.
WallPosition classify_wall(const Cone& cone, const Vec& functional);

struct Wall {
  Vec functional;
  std::string label;
  std::string cite;
  std::string note;
  WallPosition position = WallPosition::Interior;
};

struct WallSet {
  std::string surface;  // surface spec, empty for free-form sets
  int n = 0;
  std::vector<std::string> coordinate_labels;
  Cone bounding_cone;
  std::vector<Wall> walls;

  /// Primitive wall functionals, sorted.
  std::vector<Vec> functionals() const;
};

/// Validates the walls (nonzero, right size), normalizes each functional to a
/// primitive vector, drops duplicates up to positive scale and computes its
/// position against the bounding cone.
WallSet make_wallset(std::string surface, int n, std::vector<std::string> coordinate_labels,
                     Cone bounding_cone, std::vector<Wall> walls);

struct Subspace {
  std::vector<std::string> labels;
  std::vector<Vec> basis;  // ambient coordinates, linearly independent
};

struct WallRestriction {
  WallSet restricted;
  std::vector<Wall> dropped;
};

/// Restricts every wall functional to the subspace. Walls that vanish on the
/// whole subspace go to `dropped`.
WallRestriction restrict_walls(const WallSet& walls, const Subspace& subspace);

/// Carries a wall set on F_{r+1}^[n] (coordinates E, F, B) to F_r^[n] by the
/// adjoint of the roof transport. Wall-hood of the images is not decided.
WallSet transport_wallset_down(const WallSet& walls);

/// Sign of each wall functional at `v`; throws if v is outside the bounding cone.
std::vector<int> locate(const WallSet& walls, const Vec& v);

}  // namespace hilbcone
