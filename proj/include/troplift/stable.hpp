#pragma once

#include "troplift/cycles.hpp"
#include "troplift/eps_scalar.hpp"
#include "troplift/errors.hpp"
#include "troplift/polyhedron.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace troplift {

struct StableResult {
  std::map<Vec, Integer, VecLess> points;

  Integer total() const;
  friend bool operator==(const StableResult &, const StableResult &) = default;
};

// A cell pair whose joint direction span contains v, with the set of r for
// which (F + r v) ∩ F' is nonempty.
struct CertificateEntry {
  std::size_t cell_a;
  std::size_t cell_b;
  Interval params;
};

struct Displacement {
  Vec v;
  // k of the moment-curve candidate (1, k, ..., k^(n-1)); 0 when supplied.
  std::size_t candidate = 0;
  std::vector<CertificateEntry> certificate;
};

// (1, k, k^2, ..., k^(n-1))
Vec moment_vector(std::size_t n, std::size_t k);

// Admissibility of v for the pair: every cell pair with dimension sum below n,
// and every facet pair with deficient joint span, meets along translates by
// r v for at most one r. Counterexample: indices into a.cells(), b.cells().
Verdict<std::pair<std::size_t, std::size_t>> check_admissible(const WeightedComplex &a, const WeightedComplex &b,
                                                              const Vec &v);
// Same, returning the certificate when v is admissible.
std::optional<Displacement> certify(const WeightedComplex &a, const WeightedComplex &b, const Vec &v);

// First admissible moment-curve candidate.
Displacement pick_generic_vector(const WeightedComplex &a, const WeightedComplex &b);

// [N : N_P + N_Q] m(P) m(Q) at a transverse intersection of p and q.
Integer transverse_multiplicity(const Polyhedron &p, const Integer &wp, const Polyhedron &q, const Integer &wq);

// One facet pair (P, P') meeting after displacement: x(eps) ∈ (P + eps v) ∩ P'.
struct Contribution {
  std::size_t facet_a;
  std::size_t facet_b;
  std::vector<EpsScalar> point; // affine in eps
  Vec limit;
  Integer mult;
};

// Facet-pair contributions for an admissible v, in facet order.
std::vector<Contribution> stable_contributions(const WeightedComplex &a, const WeightedComplex &b, const Vec &v);

// Stable intersection of complexes of complementary dimension. When v is
// supplied it must be admissible.
StableResult stable_intersect(const WeightedComplex &a, const WeightedComplex &b,
                              const std::optional<Displacement> &v = std::nullopt);

// Stable intersection of m >= 2 cycles through the diagonal of (N_R)^m.
StableResult stable_intersect_multi(const std::vector<WeightedComplex> &cycles);

// The diagonal {(x, ..., x)} in Q^(n m) with weight 1.
WeightedComplex diagonal(std::size_t n, std::size_t m);

} // namespace troplift
