#pragma once

// The catalog of published example values, rerun against the library.
// Documented discrepancies between the published statements and what the
// arithmetic gives are reported as warnings, never as failures.

#include "hilbcone/json_io.hpp"

#include <string>
#include <vector>

namespace hilbcone {

enum class Outcome { Pass, Fail, Warn };
const char* to_string(Outcome o);

struct CheckRecord {
  std::string id;
  std::string tag;  // p2, fr, k3 or cone
  std::string description;
  Outcome outcome = Outcome::Fail;
  std::string detail;
};

struct ReproduceReport {
  std::vector<CheckRecord> records;

  int count(Outcome o) const;
  bool ok() const { return count(Outcome::Fail) == 0; }
};

/// The three warnings a healthy run produces.
const std::vector<std::string>& documented_warnings();

const std::vector<std::string>& reproduce_tags();

/// Runs the checks whose tag is in `tags` (all of them when empty). Throws
/// std::invalid_argument on an unknown tag.
ReproduceReport run_reproduce(const std::vector<std::string>& tags = {});

std::string format_report(const ReproduceReport& r);
json to_json(const ReproduceReport& r);

}  // namespace hilbcone
