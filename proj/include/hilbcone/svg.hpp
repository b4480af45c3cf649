#pragma once

// SVG 1.1 pictures of wall sets. Rank 2 is drawn as a fan of rays, rank 3 as
// an affine cross-section of the cone. All geometry is exact; coordinates
// are only rounded to one decimal when printed, so output is byte stable.

#include "hilbcone/fixtures.hpp"

#include <string>

namespace hilbcone {

inline constexpr int kCanvasSize = 600;

/// Default section for rank 3: coordinate sum 1, viewed through
/// x = v1 - v0 and y = v2 - (v0 + v1)/2.
Section default_section();

/// Throws std::invalid_argument when the rank is not 2 or 3, or when a
/// bounding ray does not meet the section plane.
std::string cross_section_svg(const Fixture& f);

}  // namespace hilbcone
