#include "troplift/extended.hpp"

#include <algorithm>
#include <map>

namespace troplift {

namespace {

void same_fan(const Fan &a, const Fan &b) {
  bool same = a.ambient_dim() == b.ambient_dim() && a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].key() == b[i].key();
  if (!same) throw Error(ErrorKind::FanMismatch, "stratified sets over different fans");
}

void add_piece(std::vector<Polyhedron> &bucket, Polyhedron p) {
  if (p.is_empty()) return;
  for (const auto &q : bucket)
    if (q.key() == p.key()) return;
  bucket.push_back(std::move(p));
}

} // namespace

bool StratifiedSet::contains(const ExtendedPoint &x) const {
  if (x.stratum >= pieces.size()) return false;
  return std::any_of(pieces[x.stratum].begin(), pieces[x.stratum].end(),
                     [&](const Polyhedron &p) { return p.contains(x.coords); });
}

std::size_t StratifiedSet::piece_count() const {
  std::size_t n = 0;
  for (const auto &b : pieces) n += b.size();
  return n;
}

std::vector<std::size_t> StratifiedSet::occupied() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (!pieces[i].empty()) out.push_back(i);
  return out;
}

ExtendedPoint to_stratum(const Fan &fan, std::size_t stratum, const Vec &x) {
  if (x.size() != fan.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "point of wrong dimension");
  return {stratum, apply_rows(quotient_basis(fan[stratum]), x)};
}

bool relint_meets(const Cone &sigma, const Polyhedron &c) {
  const Polyhedron &s = sigma.poly();
  const FacialData &fd = s.facial();
  std::vector<Halfspace> closed = c.ineqs(), strict;
  for (auto i : fd.equalities) closed.push_back(s.ineqs()[i]);
  for (auto i : fd.facets) strict.push_back(s.ineqs()[i]);
  return strict_point(s.ambient_dim(), closed, strict).has_value();
}

StratifiedSet extended_closure(const PolyCollection &coll, const Fan &fan) {
  if (!fan.is_pointed()) throw Error(ErrorKind::NotPointed, "closure needs a pointed fan");
  const std::size_t n = fan.ambient_dim();
  if (coll.ambient_dim != n) throw Error(ErrorKind::DimensionMismatch, "fan and collection dimensions differ");
  StratifiedSet out(fan);
  for (const auto &p : coll.polys) {
    if (p.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "collection member of wrong dimension");
    if (p.is_empty()) continue;
    Cone rho = recession_cone(p);
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (fan[i].dimension() == 0) {
        add_piece(out.pieces[i], project(p, fan[i]));
        continue;
      }
      if (relint_meets(fan[i], rho.poly())) add_piece(out.pieces[i], project(p, fan[i]));
    }
  }
  return out;
}

StratifiedSet extended_closure(const Polyhedron &p, const Fan &fan) {
  return extended_closure(PolyCollection{p.ambient_dim(), {p}}, fan);
}

StratifiedSet stratified_intersect(const StratifiedSet &a, const StratifiedSet &b) {
  same_fan(a.fan, b.fan);
  StratifiedSet out(a.fan);
  for (std::size_t i = 0; i < a.pieces.size(); ++i)
    for (const auto &p : a.pieces[i])
      for (const auto &q : b.pieces[i]) add_piece(out.pieces[i], intersect(p, q));
  return out;
}

StratifiedSet stratified_union(const StratifiedSet &a, const StratifiedSet &b) {
  same_fan(a.fan, b.fan);
  StratifiedSet out = a;
  for (std::size_t i = 0; i < b.pieces.size(); ++i)
    for (const auto &q : b.pieces[i]) add_piece(out.pieces[i], q);
  return out;
}

Verdict<ExtendedPoint> stratified_equal(const StratifiedSet &a, const StratifiedSet &b) {
  same_fan(a.fan, b.fan);
  for (std::size_t i = 0; i < a.pieces.size(); ++i) {
    for (const auto &p : a.pieces[i])
      if (auto x = uncovered_point(p, b.pieces[i])) return Verdict<ExtendedPoint>::no({i, *x});
    for (const auto &q : b.pieces[i])
      if (auto x = uncovered_point(q, a.pieces[i])) return Verdict<ExtendedPoint>::no({i, *x});
  }
  return Verdict<ExtendedPoint>::yes();
}

PolyCollection pairwise_intersection(const PolyCollection &a, const PolyCollection &b) {
  if (a.ambient_dim != b.ambient_dim) throw Error(ErrorKind::DimensionMismatch, "collections of different dimension");
  PolyCollection out{a.ambient_dim, {}};
  for (const auto &p : a.polys)
    for (const auto &q : b.polys) add_piece(out.polys, intersect(p, q));
  return out;
}

std::optional<ClosureSequence> closure_sequence(const Polyhedron &p, const Fan &fan,
                                                std::size_t stratum, const Vec &target) {
  const Cone &sigma = fan[stratum];
  const std::size_t n = fan.ambient_dim();
  std::vector<Vec> q = quotient_basis(sigma);
  if (target.size() != q.size()) throw Error(ErrorKind::DimensionMismatch, "target of wrong dimension");
  // base: a point of p over the target
  Polyhedron fiber = p;
  for (std::size_t k = 0; k < q.size(); ++k) fiber = with_equation(fiber, {q[k], target[k]});
  if (fiber.is_empty()) return std::nullopt;
  // direction: a point of relint(sigma) ∩ ρ(p)
  Cone rho = recession_cone(p);
  const FacialData &fd = sigma.poly().facial();
  std::vector<Halfspace> closed = rho.poly().ineqs(), strict;
  for (auto i : fd.equalities) closed.push_back(sigma.poly().ineqs()[i]);
  for (auto i : fd.facets) strict.push_back(sigma.poly().ineqs()[i]);
  auto w = strict_point(n, closed, strict);
  if (!w) return std::nullopt;
  return ClosureSequence{fiber.facial().relint_point, *w};
}

std::optional<std::string> check_sequence(const ClosureSequence &s, const Polyhedron &p,
                                          const Fan &fan, std::size_t stratum, const Vec &target) {
  const Cone &sigma = fan[stratum];
  const std::size_t n = fan.ambient_dim();
  if (!p.contains(s.base)) return "base point not in the polyhedron";
  if (!recession_cone(p).poly().contains(s.direction)) return "direction not in the recession cone";
  std::vector<Vec> q = quotient_basis(sigma);
  if (apply_rows(q, s.base) != target) return "projection of the sequence differs from the target";
  if (!is_zero(apply_rows(q, s.direction))) return "projection of the sequence is not constant";
  // dual cone {u : <u, r> <= 0 for every ray r of sigma}
  std::vector<Halfspace> rows;
  for (const auto &r : sigma.rays()) rows.push_back({r, Scalar(0)});
  Polyhedron dual(n, rows);
  for (const auto &u : dual.generators().rays) {
    bool perp = std::all_of(sigma.rays().begin(), sigma.rays().end(),
                            [&](const Vec &r) { return is_zero(dot(u, r)); });
    if (perp) continue;
    if (sign(dot(u, s.direction)) >= 0) return "pairing with " + to_string(u) + " does not diverge";
  }
  return std::nullopt;
}

} // namespace troplift
