#pragma once

// Class expressions such as "7E+7F", "18H-5/2B" or "1/2 E1 - B": sums of
// optional rational coefficients times labels. Whitespace is ignored.

#include "hilbcone/linalg.hpp"
#include "hilbcone/nslattice.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hilbcone {

/// Maps labels to coordinate vectors. Labels are tried longest first.
class ExprContext {
 public:
  ExprContext() = default;
  /// Each label is the corresponding unit vector.
  explicit ExprContext(std::vector<std::string> basis_labels);

  /// Surface basis plus derived classes (H on Hirzebruch surfaces), plus the
  /// extra coordinate "B" when `with_b` is set.
  static ExprContext for_surface(const SurfaceLattice& s, bool with_b);

  /// Every unseen label becomes a fresh coordinate; vectors parsed earlier
  /// must then be padded with `pad`.
  static ExprContext free_labels();

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  void add_alias(std::string label, Vec value);

  Vec parse(std::string_view text);
  /// Comma separated list.
  std::vector<Vec> parse_list(std::string_view text);
  /// Zero-extends a vector parsed before later labels were added.
  Vec pad(const Vec& v) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<std::string, Vec>> aliases_;
  bool free_ = false;
};

/// Splits on commas, trimming whitespace; empty items are rejected.
std::vector<std::string> split_list(std::string_view text);

}  // namespace hilbcone
