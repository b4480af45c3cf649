#pragma once

// JSON views of the library's values. Rationals are written as exact "p/q"
// strings, or "p" when integral.

#include "hilbcone/chambers.hpp"
#include "hilbcone/hilbpic.hpp"
#include "hilbcone/severi.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace hilbcone {

using json = nlohmann::ordered_json;

json rational_to_json(const Rational& q);
/// Accepts integers or "p/q" strings.
Rational rational_from_json(const json& j);
json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

json to_json(const SurfaceLattice& s, const HilbDivClass& d);
json to_json(const SurfaceLattice& s, const HilbCurveClass& c);
HilbDivClass hilb_class_from_json(const SurfaceLattice& s, const json& j);

json to_json(const SeveriResult& r);
json to_json(const RamificationReport& r);
json p2_enumeration_to_json(long long n, const std::vector<P2Candidate>& cands);
json to_json(const HirzebruchEnumeration& e);
json to_json(const K3Enumeration& e);

/// `labels` may be empty; when given, generators also appear as expressions.
json to_json(const Cone& c, const std::vector<std::string>& labels = {});
json to_json(const Wall& w);
json to_json(const WallSet& w);
json to_json(const WallRestriction& r);

}  // namespace hilbcone
