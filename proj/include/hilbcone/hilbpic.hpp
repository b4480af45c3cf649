#pragma once

// Divisor and curve classes on the Hilbert scheme of n points X^[n].
// N^1(X^[n]) is spanned by the lifts D_i[n] of a basis of Pic(X) together with
// the exceptional divisor B of the Hilbert-Chow morphism.

#include "hilbcone/nslattice.hpp"

#include <string>
#include <vector>

namespace hilbcone {

struct HilbDivClass {
  SurfaceClass surface_part;
  Rational b_coeff;
  int n = 1;

  /// Coordinates (surface coefficients..., B coefficient).
  Vec to_vector() const;
  static HilbDivClass from_vector(const Vec& v, int n);

  friend bool operator==(const HilbDivClass&, const HilbDivClass&) = default;
  friend HilbDivClass operator+(const HilbDivClass& a, const HilbDivClass& b);
  friend HilbDivClass operator-(const HilbDivClass& a, const HilbDivClass& b);
  friend HilbDivClass operator*(const Rational& s, const HilbDivClass& a);
};

/// A curve class, kept only through its intersection numbers with D_i[n] and B.
struct HilbCurveClass {
  Vec dual_surface_values;
  Rational b_value;
  int n = 1;
  std::string label;

  Vec to_vector() const;
};

/// D[n]: subschemes meeting a fixed curve of class D.
HilbDivClass lift_divisor(const SurfaceLattice& s, const SurfaceClass& d, int n);
/// The exceptional divisor B[n].
HilbDivClass exceptional_divisor(const SurfaceLattice& s, int n);

/// True iff the surface part is integral and 2 * b_coeff is an integer, i.e.
/// the class lies in the lattice spanned by the D_i[n] and B/2.
bool is_pic_integral(const HilbDivClass& d);

/// C_D[n]: n-1 fixed general points and one point moving on a curve of class D0.
HilbCurveClass curve_from_divisor(const SurfaceLattice& s, const SurfaceClass& d0, int n,
                                  std::string label = "C_D");

/// Fiber of the Hilbert-Chow morphism over a general point of the diagonal.
/// B-pairing -2.
HilbCurveClass gamma2(const SurfaceLattice& s, int n);

HilbCurveClass curve_from_pairings(Vec values, Rational b_value, int n, std::string label);

Rational pair(const HilbCurveClass& c, const HilbDivClass& d);

/// F^* for the rational contraction induced by a blowup `target` -> `source`
/// (possibly a chain of blowups). New exceptional coefficients are zero.
HilbDivClass pullback_blowup_hilb(const HilbDivClass& d, const SurfaceLattice& source,
                                  const SurfaceLattice& target);

/// Transport across the Hirzebruch roof F_r <- F_{r,r+1} -> F_{r+1}.
/// `fr` must be a Hirzebruch lattice; the result lives on F_{r+1}.
HilbDivClass transport_up(const SurfaceLattice& fr, const HilbDivClass& d);
/// `fr1` is F_{r+1}; the result lives on F_r.
HilbDivClass transport_down(const SurfaceLattice& fr1, const HilbDivClass& d);

/// Matrices of the transports on (E, F, B) coordinates, built column by column
/// from transport_up / transport_down.
Mat transport_up_matrix(int r);
Mat transport_down_matrix(int r);

/// t with lambda*D = J + t*H where lambda matches the B-coefficients.
Rational slope_decompose(const HilbDivClass& d, const HilbDivClass& j, const HilbDivClass& h);

/// "18H-5/2B" style text over the lattice labels plus "B".
std::string format_class(const SurfaceLattice& s, const HilbDivClass& d);
std::string format_vector(const std::vector<std::string>& labels, const Vec& v);

}  // namespace hilbcone
