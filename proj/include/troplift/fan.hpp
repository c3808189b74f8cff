#pragma once

#include "troplift/errors.hpp"
#include "troplift/polyhedron.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace troplift {

// Finite fan stored with all faces, deduplicated and sorted by (dimension, key).
class Fan {
public:
  Fan() = default;
  // Closes the given cones under faces.
  Fan(std::size_t ambient_dim, const std::vector<Cone> &cones);
  // Cones already closed under faces; only deduplicated and sorted.
  static Fan from_closed(std::size_t ambient_dim, const std::vector<Cone> &cones);
  static Fan trivial(std::size_t n) { return from_closed(n, {Cone::origin(n)}); }

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Cone> &cones() const { return cones_; }
  std::size_t size() const { return cones_.size(); }
  const Cone &operator[](std::size_t i) const { return cones_[i]; }

  std::optional<std::size_t> index_of(const Polyhedron &c) const;
  bool is_pointed() const;
  // Indices of cones that are not faces of other cones.
  std::vector<std::size_t> maximal() const;
  // Indices of the cones contained in c.
  std::vector<std::size_t> cones_inside(const Polyhedron &c) const;
  // Index of the cone whose relative interior contains x, if x is in the support.
  std::optional<std::size_t> carrier(const Vec &x) const;

private:
  std::size_t dim_ = 0;
  std::vector<Cone> cones_;
};

struct CompactifyingWitness {
  std::size_t poly;
  Vec direction; // in ρ(P), outside every cone of the fan contained in ρ(P)
};

// Fan axioms: closed under faces, pairwise intersections are common faces.
Verdict<std::pair<std::size_t, std::size_t>> is_fan(const Fan &fan);

// Counterexample (cone index, polyhedron index).
Verdict<std::pair<std::size_t, std::size_t>> is_compatible(const Fan &fan, const PolyCollection &coll);
Verdict<CompactifyingWitness> is_compactifying(const Fan &fan, const PolyCollection &coll);
Fan build_compactifying_fan(const PolyCollection &coll, bool minimal_support);
Fan common_refinement(const Fan &a, const Fan &b);
PolyCollection delta_decompose(const PolyCollection &coll, const Fan &fan);
PolyCollection thicken(const PolyCollection &coll, const Scalar &eps);
// Counterexample: index of a cone that is not smooth.
Verdict<std::size_t> is_smooth(const Fan &fan);
std::optional<Polyhedron> enclosing_polyhedron(const PolyCollection &coll, const Fan &fan);

} // namespace troplift
