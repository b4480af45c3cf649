#pragma once

// Neron-Severi lattices of the surfaces we work with: the projective plane,
// Hirzebruch surfaces, blowups of either at general points, and rank-one K3
// surfaces. All arithmetic is exact.

#include "hilbcone/linalg.hpp"
#include "hilbcone/rational.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hilbcone {

/// Coordinates of a divisor class in a lattice's basis.
struct SurfaceClass {
  Vec coeffs;

  SurfaceClass() = default;
  explicit SurfaceClass(Vec c) : coeffs(std::move(c)) {}

  std::size_t size() const { return coeffs.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs[i]; }
  bool is_integral() const;

  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
  friend SurfaceClass operator+(const SurfaceClass& a, const SurfaceClass& b);
  friend SurfaceClass operator-(const SurfaceClass& a, const SurfaceClass& b);
  friend SurfaceClass operator*(const Rational& s, const SurfaceClass& a);
};

class SurfaceLattice;

enum class SurfaceKindTag { P2, Hirzebruch, Blowup, K3 };

struct SurfaceKind {
  SurfaceKindTag tag = SurfaceKindTag::P2;
  /// r for Hirzebruch, number of points for Blowup, degree for K3.
  int param = 0;
  std::shared_ptr<const SurfaceLattice> parent;  // Blowup only
};

enum class Tri { Yes, No, Unknown };
const char* to_string(Tri t);

class SurfaceLattice {
 public:
  SurfaceLattice(std::vector<std::string> labels, std::vector<std::vector<long long>> gram,
                 SurfaceClass canonical, long long chi_o,
                 std::optional<std::vector<SurfaceClass>> eff_generators, SurfaceKind kind);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::vector<std::vector<long long>>& gram() const { return gram_; }
  const SurfaceClass& canonical() const { return canonical_; }
  long long chi_o() const { return chi_o_; }
  const std::optional<std::vector<SurfaceClass>>& eff_generators() const { return eff_; }
  const SurfaceKind& kind() const { return kind_; }

  /// Named classes outside the basis (H = E + rF on Hirzebruch surfaces and
  /// their blowups).
  const std::vector<std::pair<std::string, SurfaceClass>>& derived_classes() const {
    return derived_;
  }

  /// Class with a given basis or derived label; throws if unknown.
  SurfaceClass named(const std::string& label) const;
  SurfaceClass basis_vector(std::size_t i) const;
  SurfaceClass zero() const;
  SurfaceClass make_class(const std::vector<long long>& coeffs) const;

  /// "p2", "fr:<r>", "k3:<deg>", "blowup:<parent>:<k>".
  std::string spec() const;

  /// Structural equality: labels, Gram matrix, canonical class and kind spec.
  bool same_as(const SurfaceLattice& other) const;

  void add_derived(std::string label, SurfaceClass cls);

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<long long>> gram_;
  SurfaceClass canonical_;
  long long chi_o_;
  std::optional<std::vector<SurfaceClass>> eff_;
  SurfaceKind kind_;
  std::vector<std::pair<std::string, SurfaceClass>> derived_;
};

SurfaceLattice make_p2();
SurfaceLattice make_hirzebruch(int r);
SurfaceLattice blow_up(const SurfaceLattice& s, int k);
SurfaceLattice make_k3(int deg);

/// Parses the CLI surface grammar; throws std::invalid_argument.
SurfaceLattice parse_surface_spec(const std::string& spec);

Rational pair(const SurfaceLattice& s, const SurfaceClass& c, const SurfaceClass& d);
Rational self_intersection(const SurfaceLattice& s, const SurfaceClass& c);
/// 1 + (C^2 + C.K)/2
Rational arithmetic_genus(const SurfaceLattice& s, const SurfaceClass& c);
/// chi(O) + (C^2 - C.K)/2
Rational chi(const SurfaceLattice& s, const SurfaceClass& c);

Integer h0_hirzebruch(long long r, long long a, long long b);
Integer h0_p2(long long d);

/// Sections of a class when the surface is one where we know them: dH on the
/// plane, aE+bF on a Hirzebruch surface, dL on a rank-one K3. nullopt otherwise.
std::optional<Integer> h0(const SurfaceLattice& s, const SurfaceClass& c);

/// Nonnegative-combination membership in the stored effective generators.
/// Unknown when the surface carries none or they do not form a basis.
Tri effectivity(const SurfaceLattice& s, const SurfaceClass& c);

/// (positive, negative) eigenvalue counts of the Gram matrix, by congruence
/// diagonalization.
std::pair<int, int> signature(const SurfaceLattice& s);

/// Columns are the coordinates of (p2*E_{r+1}, p2*F, strict transform of the
/// fiber) in the basis (p1*E_r, p1*F, e) of the roof Bl_1(F_r) = Bl_1(F_{r+1}).
using IntMat3 = std::array<std::array<long long, 3>, 3>;
IntMat3 roof_basis_change(int r);
Mat to_rational(const IntMat3& m);
Mat gram_matrix(const SurfaceLattice& s);

/// Total transform of a class from the parent of `blowup` (or from any
/// ancestor in its blowup chain) into the blowup's basis.
SurfaceClass pullback_to_blowup(const SurfaceLattice& blowup, const SurfaceLattice& source,
                                const SurfaceClass& c);
/// Pushforward of a blowup class to its immediate parent: exceptional
/// coordinates are dropped.
SurfaceClass pushforward_from_blowup(const SurfaceLattice& blowup, const SurfaceClass& c);

/// Coordinates of `c` in a different family of classes; nullopt if `c` is not
/// in their span.
std::optional<Vec> coordinates_in(const SurfaceClass& c, const std::vector<SurfaceClass>& basis);

}  // namespace hilbcone
