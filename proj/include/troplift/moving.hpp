#pragma once

#include "troplift/cycles.hpp"
#include "troplift/errors.hpp"
#include "troplift/extended.hpp"
#include "troplift/fan.hpp"
#include "troplift/stable.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace troplift {

struct CompactifyingDatum {
  WeightedComplex trop_a;
  WeightedComplex trop_b;
  Component component;
  Fan fan;
  PolyCollection coll;
};

struct DatumFailure {
  std::string clause;
  std::string detail;
  std::optional<Vec> point;                               // witness point, if any
  std::optional<std::pair<std::size_t, std::size_t>> pair; // (cone, cell) for compatibility
};

// Trop(a) ∩ Trop(b) ∩ |coll| = |C|; the fan is a pointed compactifying fan
// for coll, compatible with Trop(b) ∩ coll.
Verdict<DatumFailure> validate_datum(const CompactifyingDatum &d);

struct MovingData {
  PolyCollection thickened;
  std::vector<Scalar> amounts; // thickening amount of each piece
  Scalar eps;
  Displacement v;
};

// Equal thickened pieces (by canonical key), amounts, eps and v.
bool same_moving_data(const MovingData &a, const MovingData &b);

// Nonzero r at which the combinatorics of (Trop(a) + r v) ∩ Trop(b) ∩ |P'|
// may change: endpoints of the parameter sets of translates meeting the
// boundary of the union of interiors, and isolated parameters of cell pairs
// with deficient joint span. Sorted, without duplicates.
std::vector<Scalar> moving_breakpoints(const CompactifyingDatum &d, const PolyCollection &thickened, const Vec &v);

// Δ-decomposes, thickens each piece by the first amount 1, 1/2, 1/4, ...
// keeping the intersection and incidence conditions, picks v generically and
// eps as half the first breakpoint.
// Throws PreconditionFailed when the datum is invalid.
MovingData find_moving_data(const CompactifyingDatum &d);

struct MovingSample {
  Scalar r;
  std::vector<Vec> points;
  Integer total;
  bool finite = true;
  bool interior = true;
  bool transverse = true;
};

struct MovingReport {
  std::vector<std::string> failures;
  std::vector<MovingSample> samples;
  Integer expected_total; // stable multiplicity carried by the component

  bool ok() const { return failures.empty(); }
};

// Re-checks the datum clause, clause 2 at every breakpoint in [-eps, eps],
// one point in each open interval between them, and `samples` extra evenly
// spaced values per side, the multiplicity identity, and the closure
// equalities in N_R(Δ).
MovingReport verify_moving_data(const CompactifyingDatum &d, const MovingData &m, std::size_t samples);

// Points of (Trop(a) + r v) ∩ Trop(b) ∩ |P'| from facet triples; pieces of
// positive dimension are returned as well.
std::vector<Polyhedron> translated_intersection(const CompactifyingDatum &d, const PolyCollection &thickened,
                                                const Vec &v, const Scalar &r);

} // namespace troplift
