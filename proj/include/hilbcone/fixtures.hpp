#pragma once

// Wall-set fixture files. Format:
//   {"surface": "fr:1", "n": 3, "basis": ["E", "F", "B"],
//    "bounding_cone": [[1, 0, 0], ...],
//    "walls": [{"functional": [0, 1, 4], "label": "...", "cite": "...", "note": "..."}],
//    "marks": [{"label": "H", "class": [1, 1, 0]}],
//    "shaded": [[1, 1, 0], ...],
//    "section": {"normal": [1, 2, 4], "x": [-5, 5, 0], "y": [0, 5, 20]}}
// Entries are integers or "p/q" strings. Only surface, n, bounding_cone and
// walls are required; basis defaults to the surface basis followed by B.

#include "hilbcone/chambers.hpp"
#include "hilbcone/expr.hpp"
#include "hilbcone/json_io.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hilbcone {

struct Mark {
  std::string label;
  Vec cls;
};

/// Affine section {normal . v = 1} with plane coordinates
/// (x . v, y . v) / (normal . v).
struct Section {
  Vec normal;
  Vec x;
  Vec y;
};

struct Fixture {
  WallSet walls;
  std::vector<Mark> marks;
  std::vector<Vec> shaded;
  std::optional<Section> section;
};

Fixture fixture_from_json(const json& j);
json fixture_to_json(const Fixture& f);

/// Reads a fixture file; throws std::runtime_error when unreadable and
/// std::invalid_argument when malformed.
Fixture load_fixture(const std::filesystem::path& path);

/// An existing path is returned as is; otherwise the bare name is looked up in
/// $HILBCONE_FIXTURES and then in the bundled fixture directory.
std::filesystem::path resolve_fixture(const std::string& name);
std::filesystem::path bundled_fixture_dir();

/// Expression context for the fixture's coordinates: surface labels, derived
/// classes and B when the surface spec is known, the bare basis otherwise.
ExprContext fixture_context(const WallSet& walls);

}  // namespace hilbcone
