#pragma once

#include "troplift/errors.hpp"
#include "troplift/polyhedron.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace troplift {

// Pure-dimensional weighted polyhedral complex given by its facets; lower
// cells are the faces of the facets.
struct WeightedComplex {
  std::size_t ambient_dim = 0;
  int pure_dim = 0;
  std::vector<Polyhedron> facets;
  std::vector<Integer> weights;

  // Validates dimensions and positive weights; merges facets with equal keys
  // by adding their weights.
  static WeightedComplex make(std::size_t n, int d, const std::vector<Polyhedron> &facets,
                              const std::vector<Integer> &weights);

  bool empty() const { return facets.empty(); }
  // All nonempty faces of all facets, deduplicated, sorted by dimension.
  std::vector<Polyhedron> cells() const;
  // Cells of dimension pure_dim - 1 with the indices of the facets containing them.
  struct Ridge {
    Polyhedron cell;
    std::vector<std::size_t> facets;
  };
  std::vector<Ridge> ridges() const;
  bool support_contains(const Vec &x) const;
  // Same complex with every weight multiplied by k.
  WeightedComplex scaled_weights(const Integer &k) const;
  // Product complex in Q^(n_a + n_b) with facet weights multiplied.
  friend WeightedComplex product(const WeightedComplex &a, const WeightedComplex &b);
};

// Intersections of distinct cells are common faces; counterexample is a pair
// of facet indices.
Verdict<std::pair<std::size_t, std::size_t>> is_complex(const WeightedComplex &c);

struct TropicalTerm {
  Vec exponent; // integral
  Scalar val;   // valuation of the coefficient
};

struct TropicalPolynomial {
  std::size_t num_vars = 0;
  std::vector<TropicalTerm> terms;

  // min over terms of val + <exponent, w>
  Scalar evaluate(const Vec &w) const;
  // Number of terms attaining the minimum at w.
  std::size_t minimizers(const Vec &w) const;
};

// Corner locus of f with facet weights given by lattice lengths of the dual
// edges of the regular subdivision of the Newton polytope.
WeightedComplex tropicalize_hypersurface(const TropicalPolynomial &f);

// Counterexample: a ridge at which the weighted primitive directions do not
// sum into the ridge's lattice.
Verdict<Polyhedron> check_balancing(const WeightedComplex &c);

struct Component {
  std::vector<Polyhedron> cells;
  bool bounded = true;
};

// Connected components of |a| ∩ |b|, from pairwise facet intersections with
// cells contained in other cells dropped.
std::vector<Component> intersect_components(const WeightedComplex &a, const WeightedComplex &b);

// Support of the complex as a collection of polyhedra.
PolyCollection support(const WeightedComplex &c);

} // namespace troplift
