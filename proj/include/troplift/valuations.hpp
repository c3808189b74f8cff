#pragma once

#include "troplift/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace troplift {

// Univariate polynomial over a valued field, known only through the
// valuations of its coefficients; nullopt marks a zero coefficient.
struct ValuedPoly {
  std::vector<std::optional<Scalar>> coeff_vals; // index i: coefficient of x^i
};

// Root valuation with multiplicity; nullopt stands for the root 0.
struct RootValuation {
  std::optional<Scalar> val;
  std::size_t mult;
  friend bool operator==(const RootValuation &, const RootValuation &) = default;
};

// Valuations of the roots from the lower convex hull of the points
// (i, val c_i): a hull edge of horizontal length l and slope -s gives (s, l).
// Sorted by increasing valuation; zero roots come last as (nullopt, count). Throws
// DegenerateInput for degree 0 or a zero leading coefficient.
std::vector<RootValuation> newton_polygon_valuations(const ValuedPoly &p);

} // namespace troplift
