#include "troplift/moving.hpp"

#include "troplift/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace troplift {

namespace {

std::string show(const Vec &x) { return to_string(x); }

// Rows of {(r, x) : x - r v ∈ p}, parameter first.
void push_shifted(std::vector<Halfspace> &rows, const Polyhedron &p, const Vec &v) {
  for (const auto &h : p.ineqs()) {
    Vec a{-dot(h.normal, v)};
    a.insert(a.end(), h.normal.begin(), h.normal.end());
    rows.push_back({a, h.offset});
  }
}

// Rows of {(r, x) : x ∈ p}.
void push_plain(std::vector<Halfspace> &rows, const Polyhedron &p) {
  for (const auto &h : p.ineqs()) {
    Vec a{Scalar(0)};
    a.insert(a.end(), h.normal.begin(), h.normal.end());
    rows.push_back({a, h.offset});
  }
}

// {r : (f + r v) ∩ g ∩ extra ≠ ∅}
Interval shift_params(const Polyhedron &f, const Polyhedron &g, const Polyhedron &extra, const Vec &v) {
  std::vector<Halfspace> rows;
  push_shifted(rows, f, v);
  push_plain(rows, g);
  push_plain(rows, extra);
  return parameter_set(Polyhedron(f.ambient_dim() + 1, rows), 0);
}

// Closed pieces covering |P'| minus the union of the interiors of its pieces.
std::vector<Polyhedron> boundary_pieces(const PolyCollection &thickened) {
  const std::size_t n = thickened.ambient_dim;
  std::vector<Polyhedron> mins;
  for (const auto &p : thickened.polys) mins.push_back(p.minimized());
  std::vector<Polyhedron> out;
  for (std::size_t i = 0; i < mins.size(); ++i) {
    std::vector<Polyhedron> pieces = facet_polyhedra(mins[i]);
    for (std::size_t j = 0; j < mins.size(); ++j) {
      if (j == i) continue;
      std::vector<Polyhedron> next;
      for (const auto &piece : pieces) {
        if (!strict_point(n, piece.ineqs(), mins[j].ineqs())) {
          next.push_back(piece);
          continue;
        }
        for (const auto &h : mins[j].ineqs()) {
          Polyhedron q = intersect(piece, Polyhedron(n, {{negated(h.normal), -h.offset}}));
          if (!q.is_empty()) next.push_back(q);
        }
      }
      pieces = std::move(next);
    }
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  return out;
}

void add_endpoints(std::set<Scalar> &out, const Interval &iv) {
  if (iv.empty) return;
  for (const auto *e : {&iv.lo, &iv.hi})
    if (*e && sgn(**e) != 0) out.insert(**e);
}

bool in_some_interior(const Vec &x, const PolyCollection &thickened) {
  return !uncovered_by_interiors(Polyhedron::point(x), thickened.polys);
}

// Facet pairs of (Trop(a) + r v, Trop(b)) meeting inside |P'|, with the pieces.
struct PairHit {
  std::size_t fa;
  std::size_t fb;
  Polyhedron meet; // (F + r v) ∩ G
  std::vector<Polyhedron> pieces;
};

std::vector<PairHit> pair_hits(const CompactifyingDatum &d, const PolyCollection &thickened, const Vec &v,
                               const Scalar &r) {
  std::vector<PairHit> out;
  const Vec shift = scaled(v, r);
  for (std::size_t i = 0; i < d.trop_a.facets.size(); ++i) {
    Polyhedron f = translate(d.trop_a.facets[i], shift);
    for (std::size_t j = 0; j < d.trop_b.facets.size(); ++j) {
      Polyhedron m = intersect(f, d.trop_b.facets[j]);
      if (m.is_empty()) continue;
      PairHit hit{i, j, m, {}};
      for (const auto &p : thickened.polys) {
        Polyhedron q = intersect(m, p);
        if (!q.is_empty()) hit.pieces.push_back(q);
      }
      if (!hit.pieces.empty()) out.push_back(std::move(hit));
    }
  }
  return out;
}

bool covered_by(const std::vector<Polyhedron> &ps, const std::vector<Polyhedron> &qs, std::optional<Vec> &witness) {
  for (const auto &p : ps)
    if (auto x = uncovered_point(p, qs)) {
      witness = x;
      return false;
    }
  return true;
}

// The first amount 1, 1/2, 1/4, ... whose thickening of `piece` keeps the
// intersection with Trop(a) ∩ Trop(b) inside C and meets the same cells of
// Trop(b) as the piece.
Scalar thickening_amount(const CompactifyingDatum &d, const Polyhedron &piece,
                         const std::vector<Polyhedron> &meets) {
  const std::size_t n = d.trop_a.ambient_dim;
  const auto cells_b = d.trop_b.cells();
  std::vector<bool> parent;
  for (const auto &c : cells_b) parent.push_back(!intersect(c, piece).is_empty());
  Scalar t = 1;
  for (int k = 0; k < 64; ++k, t /= 2) {
    Polyhedron p = thicken(PolyCollection{n, {piece}}, t).polys[0];
    bool ok = true;
    for (const auto &m : meets) {
      Polyhedron q = intersect(m, p);
      if (!q.is_empty() && uncovered_point(q, d.component.cells)) {
        ok = false;
        break;
      }
    }
    for (std::size_t c = 0; ok && c < cells_b.size(); ++c)
      if (!parent[c] && !intersect(cells_b[c], p).is_empty()) ok = false;
    if (ok) return t;
  }
  throw Error(ErrorKind::InternalCheck, "no thickening amount found for " + piece.str());
}

std::vector<Polyhedron> facet_meets(const CompactifyingDatum &d) {
  std::vector<Polyhedron> out;
  for (const auto &f : d.trop_a.facets)
    for (const auto &g : d.trop_b.facets) {
      Polyhedron m = intersect(f, g);
      if (!m.is_empty()) out.push_back(m);
    }
  return out;
}

// Stratum of the origin cone.
std::size_t origin_stratum(const Fan &fan) {
  auto i = fan.index_of(Cone::origin(fan.ambient_dim()));
  if (!i) throw Error(ErrorKind::InternalCheck, "fan without the origin cone");
  return *i;
}

std::string describe(const ExtendedPoint &x) {
  return "stratum " + std::to_string(x.stratum) + " at " + show(x.coords);
}

} // namespace

Verdict<DatumFailure> validate_datum(const CompactifyingDatum &d) {
  using V = Verdict<DatumFailure>;
  const std::size_t n = d.trop_a.ambient_dim;
  if (d.trop_b.ambient_dim != n || d.coll.ambient_dim != n || d.fan.ambient_dim() != n)
    throw Error(ErrorKind::DimensionMismatch, "datum parts live in different spaces");
  PolyCollection meet =
      pairwise_intersection(pairwise_intersection(support(d.trop_a), support(d.trop_b)), d.coll);
  std::optional<Vec> w;
  if (!covered_by(meet.polys, d.component.cells, w))
    return V::no({"intersection", "Trop(a) ∩ Trop(b) ∩ |P| has a point outside C", w, std::nullopt});
  if (!covered_by(d.component.cells, meet.polys, w))
    return V::no({"intersection", "C has a point outside Trop(a) ∩ Trop(b) ∩ |P|", w, std::nullopt});
  if (!d.fan.is_pointed()) return V::no({"compactifying", "fan is not pointed", std::nullopt, std::nullopt});
  if (auto c = is_compactifying(d.fan, d.coll); !c) {
    const auto &cw = *c.counterexample;
    return V::no({"compactifying",
                  "recession cone of polyhedron " + std::to_string(cw.poly) + " is not a union of cones",
                  cw.direction, std::nullopt});
  }
  PolyCollection bp = pairwise_intersection(support(d.trop_b), d.coll);
  if (auto c = is_compatible(d.fan, bp); !c) {
    auto [cone, cell] = *c.counterexample;
    return V::no({"compatible",
                  "cone " + d.fan[cone].poly().str() + " is incompatible with " + bp.polys[cell].str(),
                  std::nullopt, std::make_pair(cone, cell)});
  }
  return V::yes();
}

bool same_moving_data(const MovingData &a, const MovingData &b) {
  if (a.amounts != b.amounts || a.eps != b.eps || a.v.v != b.v.v) return false;
  if (a.thickened.polys.size() != b.thickened.polys.size()) return false;
  for (std::size_t i = 0; i < a.thickened.polys.size(); ++i)
    if (a.thickened.polys[i].key() != b.thickened.polys[i].key()) return false;
  return true;
}

std::vector<Scalar> moving_breakpoints(const CompactifyingDatum &d, const PolyCollection &thickened, const Vec &v) {
  std::set<Scalar> out;
  const auto boundary = boundary_pieces(thickened);
  for (const auto &f : d.trop_a.facets)
    for (const auto &g : d.trop_b.facets)
      for (const auto &b : boundary) add_endpoints(out, shift_params(f, g, b, v));
  const std::size_t n = d.trop_a.ambient_dim;
  const auto ca = d.trop_a.cells();
  const auto cb = d.trop_b.cells();
  for (const auto &f : ca) {
    const auto df = f.direction_basis();
    for (const auto &g : cb) {
      std::vector<Vec> joint = df;
      const auto dg = g.direction_basis();
      joint.insert(joint.end(), dg.begin(), dg.end());
      if (rank_of(joint) == n) continue;
      for (const auto &p : thickened.polys) add_endpoints(out, shift_params(f, g, p, v));
    }
  }
  return {out.begin(), out.end()};
}

MovingData find_moving_data(const CompactifyingDatum &d) {
  if (auto ok = validate_datum(d); !ok)
    throw Error(ErrorKind::PreconditionFailed,
                "invalid compactifying datum (" + ok.counterexample->clause + "): " + ok.counterexample->detail);
  MovingData m;
  PolyCollection pieces = delta_decompose(d.coll, d.fan);
  const auto meets = facet_meets(d);
  m.thickened.ambient_dim = d.coll.ambient_dim;
  for (const auto &p : pieces.polys) {
    Scalar t = thickening_amount(d, p, meets);
    m.amounts.push_back(t);
    m.thickened.polys.push_back(thicken(PolyCollection{pieces.ambient_dim, {p}}, t).polys[0]);
  }
  m.v = pick_generic_vector(d.trop_a, d.trop_b);
  std::optional<Scalar> first;
  for (const auto &r : moving_breakpoints(d, m.thickened, m.v.v)) {
    Scalar a = abs(r);
    if (!first || a < *first) first = a;
  }
  m.eps = first ? Scalar(*first / 2) : Scalar(1);
  return m;
}

std::vector<Polyhedron> translated_intersection(const CompactifyingDatum &d, const PolyCollection &thickened,
                                                const Vec &v, const Scalar &r) {
  std::map<std::string, Polyhedron> uniq;
  for (const auto &hit : pair_hits(d, thickened, v, r))
    for (const auto &p : hit.pieces) uniq.emplace(p.key(), p);
  std::vector<Polyhedron> out;
  for (auto &[k, p] : uniq) out.push_back(p);
  return out;
}

MovingReport verify_moving_data(const CompactifyingDatum &d, const MovingData &m, std::size_t samples) {
  MovingReport rep;
  auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
  const Fan &fan = d.fan;

  // Clause 1: (Δ, P') is a compactifying datum for C, P' thickens P.
  if (sgn(m.eps) <= 0) fail("eps is not positive");
  if (m.thickened.polys.empty() && !d.coll.polys.empty()) fail("thickened collection is empty");
  for (const auto &p : m.thickened.polys) {
    if (p.is_empty() || p.dimension() != static_cast<int>(p.ambient_dim())) {
      fail("thickened piece " + p.str() + " is not full-dimensional");
      continue;
    }
    if (!fan.index_of(recession_cone(p))) fail("recession cone of " + p.str() + " is not a cone of the fan");
  }
  for (const auto &p : d.coll.polys)
    if (auto x = uncovered_by_interiors(p, m.thickened.polys))
      fail("point " + show(*x) + " of |P| is outside the interior of |P'|");
  if (!rep.failures.empty()) return rep;
  CompactifyingDatum dp = d;
  dp.coll = m.thickened;
  if (auto ok = validate_datum(dp); !ok)
    fail("thickened datum fails " + ok.counterexample->clause + ": " + ok.counterexample->detail);

  // Stable multiplicity carried by C.
  rep.expected_total = 0;
  for (const auto &[x, mult] : stable_intersect(d.trop_a, d.trop_b).points)
    for (const auto &c : d.component.cells)
      if (c.contains(x)) {
        rep.expected_total += mult;
        break;
      }

  // Closure equalities over Δ.
  StratifiedSet ca = extended_closure(support(d.trop_a), fan);
  StratifiedSet cb = extended_closure(support(d.trop_b), fan);
  StratifiedSet cp = extended_closure(m.thickened, fan);
  StratifiedSet cc = extended_closure(PolyCollection{d.coll.ambient_dim, d.component.cells}, fan);
  StratifiedSet cab = stratified_intersect(cb, cp);
  if (auto eq = stratified_equal(stratified_intersect(ca, cab), cc); !eq)
    fail("closure of Trop(a) ∩ Trop(b) ∩ |P'| differs from the closure of C at " + describe(*eq.counterexample));
  StratifiedSet cpp = extended_closure(d.coll, fan);
  for (std::size_t s = 0; s < fan.size(); ++s) {
    for (const auto &c : cc.pieces[s])
      if (auto x = uncovered_point(c, cpp.pieces[s]))
        fail("closure of C leaves the closure of |P| at " + describe({s, *x}));
    for (const auto &p : cpp.pieces[s])
      if (auto x = uncovered_by_interiors(p, cp.pieces[s]))
        fail("closure of |P| is not interior to the closure of |P'| at " + describe({s, *x}));
  }

  // Clause 2 at sampled r.
  std::set<Scalar> rs;
  if (sgn(m.eps) > 0) {
    for (const auto &b : moving_breakpoints(d, m.thickened, m.v.v))
      if (abs(b) <= m.eps) rs.insert(b);
    rs.insert(m.eps);
    rs.insert(-m.eps);
    for (std::size_t k = 1; k <= samples; ++k) {
      Scalar r = m.eps * Scalar(static_cast<long>(k), static_cast<long>(samples));
      r.canonicalize();
      rs.insert(r);
      rs.insert(-r);
    }
    std::vector<Scalar> pos{0}, neg{0};
    for (const auto &r : rs) (sgn(r) > 0 ? pos : neg).push_back(r);
    std::sort(pos.begin(), pos.end());
    std::sort(neg.begin(), neg.end(), [](const Scalar &x, const Scalar &y) { return x > y; });
    for (const auto *side : {&pos, &neg})
      for (std::size_t i = 0; i + 1 < side->size(); ++i) rs.insert(((*side)[i] + (*side)[i + 1]) / 2);
  }
  const std::size_t origin = origin_stratum(fan);
  for (const auto &r : rs) {
    MovingSample smp;
    smp.r = r;
    smp.total = 0;
    const Vec shift = scaled(m.v.v, r);
    std::set<Vec, VecLess> pts;
    const auto hits = pair_hits(d, m.thickened, m.v.v, r);
    for (const auto &hit : hits)
      for (const auto &p : hit.pieces) {
        if (p.dimension() != 0) {
          smp.finite = false;
          continue;
        }
        pts.insert(p.facial().relint_point);
      }
    smp.points.assign(pts.begin(), pts.end());
    if (!smp.finite) fail("r = " + to_string(r) + ": intersection is not finite");
    for (const auto &x : smp.points) {
      if (!in_some_interior(x, m.thickened)) {
        smp.interior = false;
        fail("r = " + to_string(r) + ": point " + show(x) + " is not interior to |P'|");
      }
    }
    for (const auto &hit : hits) {
      if (hit.meet.dimension() != 0) {
        smp.transverse = false;
        continue;
      }
      const Vec x = hit.meet.facial().relint_point;
      if (!d.trop_a.facets[hit.fa].contains_relint(sub(x, shift)) || !d.trop_b.facets[hit.fb].contains_relint(x)) {
        smp.transverse = false;
        continue;
      }
      smp.total += transverse_multiplicity(translate(d.trop_a.facets[hit.fa], shift), d.trop_a.weights[hit.fa],
                                           d.trop_b.facets[hit.fb], d.trop_b.weights[hit.fb]);
    }
    if (!smp.transverse) fail("r = " + to_string(r) + ": intersection is not transverse");
    if (smp.finite && smp.transverse && smp.total != rep.expected_total)
      fail("r = " + to_string(r) + ": transverse total " + to_string(smp.total) + " differs from " +
           to_string(rep.expected_total));
    if (smp.finite) {
      PolyCollection shifted{d.trop_a.ambient_dim, {}};
      for (const auto &f : d.trop_a.facets) shifted.polys.push_back(translate(f, shift));
      StratifiedSet lhs = stratified_intersect(extended_closure(shifted, fan), cab);
      StratifiedSet rhs(fan);
      for (const auto &x : smp.points) rhs.pieces[origin].push_back(Polyhedron::point(to_stratum(fan, origin, x).coords));
      if (auto eq = stratified_equal(lhs, rhs); !eq)
        fail("r = " + to_string(r) + ": closure of the translated intersection is not the point set, at " +
             describe(*eq.counterexample));
    }
    rep.samples.push_back(std::move(smp));
  }
  return rep;
}

} // namespace troplift
