#pragma once

#include "troplift/errors.hpp"
#include "troplift/fan.hpp"
#include "troplift/polyhedron.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace troplift {

// Point of the stratum N_R / span(sigma) of N_R(Δ), sigma = fan[stratum], in
// the coordinates of quotient_basis(sigma).
struct ExtendedPoint {
  std::size_t stratum = 0;
  Vec coords;

  friend bool operator==(const ExtendedPoint &, const ExtendedPoint &) = default;
};

// Closed polyhedral pieces per stratum; pieces[i] lives in N_R / span(fan[i]).
struct StratifiedSet {
  Fan fan;
  std::vector<std::vector<Polyhedron>> pieces;

  explicit StratifiedSet(Fan f) : fan(std::move(f)), pieces(fan.size()) {}

  bool contains(const ExtendedPoint &x) const;
  std::size_t piece_count() const;
  // Strata carrying at least one piece.
  std::vector<std::size_t> occupied() const;
};

// Quotient coordinates of a point of N_R in the stratum of fan[stratum].
ExtendedPoint to_stratum(const Fan &fan, std::size_t stratum, const Vec &x);

// relint(sigma) ∩ c ≠ ∅
bool relint_meets(const Cone &sigma, const Polyhedron &c);

// Closure of |coll| in N_R(Δ): stratum sigma receives π_sigma(P) for every P
// whose recession cone meets relint(sigma).
StratifiedSet extended_closure(const PolyCollection &coll, const Fan &fan);
StratifiedSet extended_closure(const Polyhedron &p, const Fan &fan);

// Stratum-wise intersection and union of finite unions of polyhedra.
StratifiedSet stratified_intersect(const StratifiedSet &a, const StratifiedSet &b);
StratifiedSet stratified_union(const StratifiedSet &a, const StratifiedSet &b);

// Per-stratum set equality; the counterexample lies in exactly one side.
Verdict<ExtendedPoint> stratified_equal(const StratifiedSet &a, const StratifiedSet &b);

// Pairwise intersections P ∩ Q (nonempty ones) of two collections.
PolyCollection pairwise_intersection(const PolyCollection &a, const PolyCollection &b);

// The ray v_i = base + i * direction (i = 1, 2, ...) converging to a point of
// a closure piece.
struct ClosureSequence {
  Vec base;
  Vec direction;
};

// Sequence in p converging to target ∈ π_sigma(p), sigma = fan[stratum].
// nullopt when target is not in π_sigma(p) or relint(sigma) misses ρ(p).
std::optional<ClosureSequence> closure_sequence(const Polyhedron &p, const Fan &fan,
                                                std::size_t stratum, const Vec &target);

// Checks the convergence criterion exactly for a linear sequence: every v_i
// lies in p, π_sigma(v_i) equals the target for all i, and <u, v_i> decreases
// linearly for every generator u of the dual cone {u : <u, sigma> <= 0}
// outside sigma^⊥. Returns a description of the first failed clause.
std::optional<std::string> check_sequence(const ClosureSequence &s, const Polyhedron &p,
                                          const Fan &fan, std::size_t stratum, const Vec &target);

} // namespace troplift
