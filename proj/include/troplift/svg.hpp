#pragma once

#include "troplift/cycles.hpp"
#include "troplift/stable.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace troplift {

struct SvgOptions {
  // In dimension 3, the coordinate deleted before drawing.
  std::optional<std::size_t> drop_coordinate;
  int size = 400; // width and height in pixels
};

// Deterministic SVG of a complex in the plane: cells clipped to a box around
// the bounded data, weight labels at cell midpoints, and optional stable
// points as dots labeled by multiplicity. Throws UnsupportedDimension unless
// the complex lives in Q^2, or in Q^3 with a dropped coordinate.
std::string render_complex(const WeightedComplex &c, const std::optional<StableResult> &points = std::nullopt,
                           const SvgOptions &opts = {});

} // namespace troplift
