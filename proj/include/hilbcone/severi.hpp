#pragma once

// Severi divisor classes on Hilbert schemes of points: the general formula
// (K_X + 3C)[n] - 5/2 B, its specializations to the plane and Hirzebruch
// surfaces, and enumeration of the parameter sets where the Severi locus has
// codimension one.

#include "hilbcone/hilbpic.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hilbcone {

namespace flags {
inline constexpr const char* kEqSevPlusOne = "EQ_SEV_PLUS_ONE";
inline constexpr const char* kH0Ne3n = "H0_NE_3N";
inline constexpr const char* kGenusBoundFail = "GENUS_BOUND_FAIL";
inline constexpr const char* kDimEquationFail = "DIM_EQUATION_FAIL";
inline constexpr const char* kK3cNotEffective = "K3C_NOT_EFFECTIVE";
inline constexpr const char* kK3cUnknown = "K3C_EFFECTIVITY_UNKNOWN";
inline constexpr const char* kExpectedDimFail = "EXPECTED_DIM_FAIL";
inline constexpr const char* kDegreeBelow7 = "DEGREE_BELOW_7";
inline constexpr const char* kTregerException = "TREGER_EXCEPTION_6_9";
inline constexpr const char* kK3ExtraSolution = "K3_EXTRA_SOLUTION";
inline constexpr const char* kK3Deg4NoSolutions = "K3_DEG4_NO_SOLUTIONS";
inline constexpr const char* kK3Deg8NotUnique = "K3_DEG8_NOT_UNIQUE";
}  // namespace flags

enum class CheckStatus { Pass, Fail, NotApplicable };
const char* to_string(CheckStatus s);

struct DimensionCheck {
  CheckStatus status = CheckStatus::NotApplicable;
  Rational lhs;
  Rational rhs;
  std::string equation;
};

struct SeveriChecks {
  DimensionCheck dimension_equation;
  Tri k3c_effective = Tri::Unknown;
  CheckStatus genus_bound = CheckStatus::NotApplicable;
  Rational arithmetic_genus;
  CheckStatus expected_dim_condition = CheckStatus::NotApplicable;
};

struct SeveriResult {
  std::string surface;  // surface spec, e.g. "fr:1"
  std::vector<std::string> basis_labels;
  HilbDivClass cls;
  SeveriChecks checks;
  std::vector<std::string> flags;
  /// Normalized ray for the subcollection variant.
  std::optional<HilbDivClass> ray;

  bool has_flag(const std::string& f) const;
  std::string class_text() const;
};

SeveriResult severi_class_general(const SurfaceLattice& s, const SurfaceClass& c, int n,
                                  std::optional<Integer> h0_override = std::nullopt);

/// Codimension-`codim` subsystem of |O(d)|. The dimension check uses
/// C(d+2,2) = 3n + codim and raises EQ_SEV_PLUS_ONE whenever codim > 0, since
/// the alternative reading of this condition is 3n + codim + 1.
SeveriResult severi_class_p2(long long d, int n, int codim = 0);

/// Subschemes of length m of which some n points are nodes of a degree d curve
/// in a codimension-l subsystem. Requires 2 <= n <= m.
SeveriResult severi_class_subcollection(long long d, int n, int m, int l = 0);

SeveriResult severi_class_hirzebruch(long long r, long long a, long long b, int n);

struct RamificationReport {
  Rational gamma1_degree;
  Rational gamma2_degree;
  std::string sweep;
};

/// Intersection numbers of the Severi class with the sweep curve C_{D0}[n]
/// (D0 defaults to H on the plane, F on Hirzebruch surfaces, the first basis
/// class otherwise) and with the Hilbert-Chow fiber gamma2.
RamificationReport ramification_report(const SurfaceLattice& s, const SurfaceClass& c, int n,
                                       std::optional<SurfaceClass> sweep = std::nullopt);

struct P2Candidate {
  long long d = 0;
  long long n = 0;
  bool degree_at_least_7 = false;
  bool treger_exception = false;
};

std::vector<P2Candidate> enumerate_p2(long long n);
std::optional<long long> enumerate_p2_by_d(long long d);

enum class HirzFilter { Chi, H0Exact, Genus, ExpectedDim, K3cEffective, Ample, NonAmple };
const char* to_string(HirzFilter f);
HirzFilter parse_hirz_filter(const std::string& name);
const std::vector<HirzFilter>& all_hirz_filters();

struct HirzCandidate {
  long long a = 0;
  long long b = 0;
  std::map<HirzFilter, bool> verdicts;

  bool passes(const std::vector<HirzFilter>& filters) const;
};

struct HirzebruchEnumeration {
  long long r = 0;
  long long n = 0;
  std::vector<HirzFilter> filters;
  /// Every solution of (a+1)(b+1) - r a(a+1)/2 = 3n with a, b >= 0, sorted by a.
  std::vector<HirzCandidate> candidates;

  std::vector<HirzCandidate> selected() const;
};

HirzebruchEnumeration enumerate_hirzebruch(long long r, long long n,
                                           std::vector<HirzFilter> filters = {HirzFilter::Chi});

struct K3Candidate {
  long long d = 0;
  long long n = 0;
  Rational arithmetic_genus;
  bool genus_ok = false;
  std::vector<std::string> flags;
};

struct K3Enumeration {
  int deg = 0;
  long long n_max = 0;
  std::vector<K3Candidate> solutions;
  std::vector<std::string> flags;
};

/// (d, n) with n <= n_max and dim |dL| = 3n - 1, i.e. deg d^2 / 2 + 2 = 3n.
K3Enumeration enumerate_k3(int deg, long long n_max);

struct ImposingWall {
  Integer k;
  HilbDivClass cls;
};

/// For d = 1 mod 5 the Severi ray normalizes to kH - 1/2 B with k = (3d-3)/5.
ImposingWall imposing_wall(long long d);

}  // namespace hilbcone
