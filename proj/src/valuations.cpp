#include "troplift/valuations.hpp"

#include "troplift/errors.hpp"

#include <algorithm>

namespace troplift {

std::vector<RootValuation> newton_polygon_valuations(const ValuedPoly &p) {
  const auto &c = p.coeff_vals;
  if (c.size() < 2) throw Error(ErrorKind::DegenerateInput, "polynomial of degree 0");
  if (!c.back()) throw Error(ErrorKind::DegenerateInput, "leading coefficient is zero");
  std::size_t zeros = 0;
  while (!c[zeros]) ++zeros;
  const std::size_t deg = c.size() - 1;

  // Lower hull over the finite points, left to right.
  std::vector<std::size_t> hull;
  for (std::size_t i = zeros; i <= deg; ++i) {
    if (!c[i]) continue;
    while (hull.size() >= 2) {
      std::size_t a = hull[hull.size() - 2], b = hull.back();
      // drop b when it lies on or above the segment from a to i
      Scalar lhs = (*c[b] - *c[a]) * Scalar(static_cast<long>(i - a));
      Scalar rhs = (*c[i] - *c[a]) * Scalar(static_cast<long>(b - a));
      if (lhs >= rhs) hull.pop_back();
      else break;
    }
    hull.push_back(i);
  }
  std::vector<RootValuation> out;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    std::size_t a = hull[k], b = hull[k + 1];
    Scalar s = (*c[a] - *c[b]) / Scalar(static_cast<long>(b - a));
    out.push_back({s, b - a});
  }
  // slopes increase along the lower hull, so valuations decrease
  std::reverse(out.begin(), out.end());
  if (zeros > 0) out.push_back({std::nullopt, zeros});
  return out;
}

} // namespace troplift
