#include "troplift/fan.hpp"

#include "troplift/lattice.hpp"
#include "troplift/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace troplift {

namespace {

void check_coll(std::size_t n, const PolyCollection &coll) {
  if (coll.ambient_dim != n) throw Error(ErrorKind::DimensionMismatch, "fan and collection dimensions differ");
  for (const auto &p : coll.polys)
    if (p.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "collection member of wrong dimension");
}

void require_pointed(const Fan &fan) {
  if (!fan.is_pointed()) throw Error(ErrorKind::NotPointed, "fan has a cone containing a line");
}

std::vector<Cone> sorted_unique(std::vector<Cone> cones) {
  std::map<std::pair<int, std::string>, Cone> byk;
  for (auto &c : cones) byk.emplace(std::make_pair(c.dimension(), c.key()), std::move(c));
  std::vector<Cone> out;
  for (auto &[k, c] : byk) out.push_back(std::move(c));
  return out;
}

} // namespace

Fan::Fan(std::size_t ambient_dim, const std::vector<Cone> &cones) : dim_(ambient_dim) {
  std::vector<Cone> all;
  for (const auto &c : cones) {
    if (c.ambient_dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "cone of wrong dimension");
    for (const auto &f : faces(c.poly())) all.emplace_back(f.minimized());
  }
  if (all.empty()) all.push_back(Cone::origin(dim_));
  cones_ = sorted_unique(std::move(all));
}

Fan Fan::from_closed(std::size_t ambient_dim, const std::vector<Cone> &cones) {
  Fan f;
  f.dim_ = ambient_dim;
  for (const auto &c : cones)
    if (c.ambient_dim() != ambient_dim) throw Error(ErrorKind::DimensionMismatch, "cone of wrong dimension");
  f.cones_ = sorted_unique(cones);
  return f;
}

std::optional<std::size_t> Fan::index_of(const Polyhedron &c) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].key() == c.key()) return i;
  return std::nullopt;
}

bool Fan::is_pointed() const {
  return std::all_of(cones_.begin(), cones_.end(), [](const Cone &c) { return c.is_pointed(); });
}

std::vector<std::size_t> Fan::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < cones_.size() && !covered; ++j)
      if (cones_[j].dimension() > cones_[i].dimension() && cones_[j].poly().contains(cones_[i].poly()))
        covered = true;
    if (!covered) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Fan::cones_inside(const Polyhedron &c) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (c.contains(cones_[i].poly())) out.push_back(i);
  return out;
}

std::optional<std::size_t> Fan::carrier(const Vec &x) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].poly().contains(x)) return i;
  return std::nullopt;
}

Verdict<std::pair<std::size_t, std::size_t>> is_fan(const Fan &fan) {
  using V = Verdict<std::pair<std::size_t, std::size_t>>;
  std::set<std::string> keys;
  for (const auto &c : fan.cones()) keys.insert(c.key());
  // facets suffice: their own facets are checked in turn
  for (std::size_t i = 0; i < fan.size(); ++i)
    for (const auto &f : facet_polyhedra(fan[i].poly()))
      if (!keys.count(f.key())) return V::no({i, i});
  // with faces present, the intersection axiom for maximal cones implies it for all
  std::vector<std::size_t> top = fan.maximal();
  for (std::size_t a = 0; a < top.size(); ++a)
    for (std::size_t b = a + 1; b < top.size(); ++b) {
      const Polyhedron &s = fan[top[a]].poly(), &t = fan[top[b]].poly();
      Polyhedron m = intersect(s, t);
      if (!is_face(m, s) || !is_face(m, t)) return V::no({top[a], top[b]});
    }
  return V::yes();
}

Verdict<std::pair<std::size_t, std::size_t>> is_compatible(const Fan &fan, const PolyCollection &coll) {
  check_coll(fan.ambient_dim(), coll);
  require_pointed(fan);
  for (std::size_t k = 0; k < coll.polys.size(); ++k) {
    if (coll.polys[k].is_empty()) continue;
    Cone rho = recession_cone(coll.polys[k]);
    for (std::size_t i = 0; i < fan.size(); ++i) {
      const Polyhedron &sigma = fan[i].poly();
      if (rho.poly().contains(sigma)) continue;
      // relint(σ) meets ρ iff a relint point of σ ∩ ρ leaves every facet of σ slack
      Vec x = relint_point(intersect(sigma, rho.poly())).point;
      bool on_facet = false;
      for (auto f : sigma.facial().facets)
        if (dot(sigma.ineqs()[f].normal, x) == sigma.ineqs()[f].offset) on_facet = true;
      if (!on_facet) return Verdict<std::pair<std::size_t, std::size_t>>::no({i, k});
    }
  }
  return Verdict<std::pair<std::size_t, std::size_t>>::yes();
}

Verdict<CompactifyingWitness> is_compactifying(const Fan &fan, const PolyCollection &coll) {
  check_coll(fan.ambient_dim(), coll);
  require_pointed(fan);
  for (std::size_t k = 0; k < coll.polys.size(); ++k) {
    if (coll.polys[k].is_empty()) continue;
    Cone rho = recession_cone(coll.polys[k]);
    std::vector<Polyhedron> inside;
    for (auto i : fan.cones_inside(rho.poly())) inside.push_back(fan[i].poly());
    if (auto x = uncovered_point(rho.poly(), inside)) return Verdict<CompactifyingWitness>::no({k, *x});
  }
  return Verdict<CompactifyingWitness>::yes();
}

Fan build_compactifying_fan(const PolyCollection &coll, bool minimal_support) {
  const std::size_t n = coll.ambient_dim;
  check_coll(n, coll);
  std::vector<Cone> rhos;
  std::set<Vec, VecLess> normals;
  auto add_normal = [&](Vec a) {
    a = primitive(a);
    std::size_t k = 0;
    while (k < a.size() && is_zero(a[k])) ++k;
    if (k == a.size()) return;
    if (sgn(a[k]) < 0) a = negated(a);
    normals.insert(std::move(a));
  };
  for (const auto &p : coll.polys) {
    if (p.is_empty()) continue;
    rhos.push_back(recession_cone(p));
    for (const auto &h : rhos.back().poly().ineqs()) add_normal(h.normal);
  }
  for (std::size_t i = 0; i < n; ++i) add_normal(unit_vec(n, i));

  // faces of the central arrangement, as sign vectors with nonempty open cells
  struct Cell {
    std::vector<Halfspace> closed, strict;
  };
  std::vector<Cell> cells{Cell{}};
  for (const auto &a : normals) {
    std::vector<Cell> next;
    for (const auto &c : cells) {
      Cell zero = c;
      zero.closed.push_back({a, Scalar(0)});
      zero.closed.push_back({negated(a), Scalar(0)});
      if (strict_point(n, zero.closed, zero.strict)) next.push_back(std::move(zero));
      for (int s : {-1, 1}) {
        Cell side = c;
        side.strict.push_back({s > 0 ? negated(a) : a, Scalar(0)});
        if (strict_point(n, side.closed, side.strict)) next.push_back(std::move(side));
      }
    }
    cells = std::move(next);
  }
  std::vector<Cone> cones;
  for (const auto &c : cells) {
    std::vector<Halfspace> rows = c.closed;
    rows.insert(rows.end(), c.strict.begin(), c.strict.end());
    Cone cone(Polyhedron(n, rows).minimized());
    if (minimal_support) {
      bool inside = false;
      for (const auto &r : rhos)
        if (r.poly().contains(cone.poly())) inside = true;
      if (!inside) continue;
    }
    cones.push_back(std::move(cone));
  }
  if (cones.empty()) cones.push_back(Cone::origin(n));
  return Fan::from_closed(n, cones);
}

Fan common_refinement(const Fan &a, const Fan &b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "fans of different dimensions");
  std::vector<Cone> cones;
  for (auto i : a.maximal())
    for (auto j : b.maximal()) cones.emplace_back(intersect(a[i].poly(), b[j].poly()).minimized());
  return Fan(a.ambient_dim(), cones);
}

PolyCollection delta_decompose(const PolyCollection &coll, const Fan &fan) {
  if (!is_compactifying(fan, coll))
    throw Error(ErrorKind::NotCompactifying, "fan is not compactifying for the collection");
  const std::size_t n = coll.ambient_dim;
  PolyCollection out{n, {}};
  std::set<std::string> seen;
  for (const auto &p : coll.polys) {
    if (p.is_empty()) continue;
    Cone rho = recession_cone(p);
    const Generators &g = p.generators();
    // P = conv(V) + ρ(P) with V the vertices of P ∩ W, W complementary to the lineality
    Matrix<Scalar> lin(g.lineality.begin(), g.lineality.end());
    std::vector<std::size_t> piv = rref(lin, n);
    std::vector<Halfspace> wrows;
    for (auto c : piv) {
      wrows.push_back({unit_vec(n, c), Scalar(0)});
      wrows.push_back({negated(unit_vec(n, c)), Scalar(0)});
    }
    Polyhedron pw = intersect(p, Polyhedron(n, wrows));
    std::vector<Vec> verts = vertices(pw);
    for (auto i : fan.cones_inside(rho.poly())) {
      const Cone &sigma = fan[i];
      Polyhedron piece =
          Polyhedron::from_generators(n, verts, sigma.rays(), sigma.poly().generators().lineality).minimized();
      if (seen.insert(piece.key()).second) out.polys.push_back(std::move(piece));
    }
  }
  return out;
}

PolyCollection thicken(const PolyCollection &coll, const Scalar &eps) {
  if (sgn(eps) <= 0) throw Error(ErrorKind::NonPositiveEps, "thickening needs eps > 0");
  PolyCollection out{coll.ambient_dim, {}};
  for (const auto &p : coll.polys) {
    std::vector<Halfspace> rows;
    Polyhedron m = p.minimized();
    for (const auto &h : m.ineqs()) rows.push_back({h.normal, h.offset + eps});
    out.polys.emplace_back(coll.ambient_dim, std::move(rows));
  }
  return out;
}

Verdict<std::size_t> is_smooth(const Fan &fan) {
  require_pointed(fan);
  for (std::size_t i = 0; i < fan.size(); ++i) {
    const auto &rays = fan[i].rays();
    if (static_cast<int>(rays.size()) != fan[i].dimension()) return Verdict<std::size_t>::no(i);
    if (rays.empty()) continue;
    auto d = snf(IntMatrix::from_columns(fan.ambient_dim(), rays));
    for (const auto &x : d)
      if (x != 1) return Verdict<std::size_t>::no(i);
  }
  return Verdict<std::size_t>::yes();
}

std::optional<Polyhedron> enclosing_polyhedron(const PolyCollection &coll, const Fan &fan) {
  if (!is_compactifying(fan, coll))
    throw Error(ErrorKind::NotCompactifying, "fan is not compactifying for the collection");
  std::vector<Vec> verts;
  std::vector<Cone> rhos;
  for (const auto &p : coll.polys) {
    if (p.is_empty()) continue;
    if (!p.is_pointed()) throw Error(ErrorKind::NotPointed, "collection member contains a line");
    for (const auto &v : vertices(p)) verts.push_back(v);
    rhos.push_back(recession_cone(p));
  }
  if (verts.empty()) return std::nullopt;
  for (const auto &sigma : fan.cones()) {
    bool ok = std::all_of(rhos.begin(), rhos.end(),
                          [&](const Cone &r) { return is_face(r.poly(), sigma.poly()); });
    if (ok) return Polyhedron::from_generators(fan.ambient_dim(), verts, sigma.rays()).minimized();
  }
  return std::nullopt;
}

} // namespace troplift
