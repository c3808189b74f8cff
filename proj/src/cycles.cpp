#include "troplift/cycles.hpp"

#include "troplift/lattice.hpp"
#include "troplift/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace troplift {

WeightedComplex WeightedComplex::make(std::size_t n, int d, const std::vector<Polyhedron> &facets,
                                      const std::vector<Integer> &weights) {
  if (facets.size() != weights.size())
    throw Error(ErrorKind::DimensionMismatch, "one weight per facet is required");
  if (d < 0 || static_cast<std::size_t>(d) > n) throw Error(ErrorKind::DimensionMismatch, "pure dimension out of range");
  WeightedComplex c;
  c.ambient_dim = n;
  c.pure_dim = d;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const Polyhedron &f = facets[i];
    if (f.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "facet of wrong ambient dimension");
    if (f.dimension() != d) throw Error(ErrorKind::DimensionMismatch, "facet of wrong dimension: " + f.str());
    if (weights[i] <= 0) throw Error(ErrorKind::PreconditionFailed, "facet weights must be positive");
    auto [it, fresh] = seen.emplace(f.key(), c.facets.size());
    if (fresh) {
      c.facets.push_back(f.minimized());
      c.weights.push_back(weights[i]);
    } else {
      c.weights[it->second] += weights[i];
    }
  }
  return c;
}

std::vector<Polyhedron> WeightedComplex::cells() const {
  std::map<std::pair<int, std::string>, Polyhedron> all;
  for (const auto &f : facets)
    for (auto &g : faces(f)) all.emplace(std::make_pair(g.dimension(), g.key()), g);
  std::vector<Polyhedron> out;
  for (auto &[k, p] : all) out.push_back(p);
  return out;
}

std::vector<WeightedComplex::Ridge> WeightedComplex::ridges() const {
  std::vector<Ridge> out;
  if (pure_dim == 0) return out;
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (auto &r : facet_polyhedra(facets[i])) {
      auto [it, fresh] = idx.emplace(r.key(), out.size());
      if (fresh) out.push_back({r, {}});
    }
  }
  for (auto &r : out)
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (facets[i].contains(r.cell)) r.facets.push_back(i);
  return out;
}

bool WeightedComplex::support_contains(const Vec &x) const {
  return std::any_of(facets.begin(), facets.end(), [&](const Polyhedron &f) { return f.contains(x); });
}

WeightedComplex WeightedComplex::scaled_weights(const Integer &k) const {
  if (k <= 0) throw Error(ErrorKind::PreconditionFailed, "weight factor must be positive");
  WeightedComplex c = *this;
  for (auto &w : c.weights) w *= k;
  return c;
}

WeightedComplex product(const WeightedComplex &a, const WeightedComplex &b) {
  std::vector<Polyhedron> fs;
  std::vector<Integer> ws;
  for (std::size_t i = 0; i < a.facets.size(); ++i)
    for (std::size_t j = 0; j < b.facets.size(); ++j) {
      fs.push_back(product(a.facets[i], b.facets[j]));
      ws.push_back(a.weights[i] * b.weights[j]);
    }
  return WeightedComplex::make(a.ambient_dim + b.ambient_dim, a.pure_dim + b.pure_dim, fs, ws);
}

Verdict<std::pair<std::size_t, std::size_t>> is_complex(const WeightedComplex &c) {
  for (std::size_t i = 0; i < c.facets.size(); ++i)
    for (std::size_t j = i + 1; j < c.facets.size(); ++j) {
      Polyhedron x = intersect(c.facets[i], c.facets[j]);
      if (x.is_empty()) continue;
      if (!is_face(x, c.facets[i]) || !is_face(x, c.facets[j])) return Verdict<std::pair<std::size_t, std::size_t>>::no({i, j});
    }
  return Verdict<std::pair<std::size_t, std::size_t>>::yes();
}

Scalar TropicalPolynomial::evaluate(const Vec &w) const {
  if (terms.empty()) throw Error(ErrorKind::DegenerateInput, "polynomial without terms");
  Scalar best = terms[0].val + dot(terms[0].exponent, w);
  for (const auto &t : terms) best = std::min(best, Scalar(t.val + dot(t.exponent, w)));
  return best;
}

std::size_t TropicalPolynomial::minimizers(const Vec &w) const {
  Scalar m = evaluate(w);
  return static_cast<std::size_t>(std::count_if(terms.begin(), terms.end(),
                                                [&](const TropicalTerm &t) { return t.val + dot(t.exponent, w) == m; }));
}

namespace {

// Lattice length of the segment conv(points); the points are collinear.
Integer lattice_length(const std::vector<Vec> &pts) {
  Vec dir;
  for (const auto &p : pts)
    if (p != pts[0]) {
      dir = primitive(sub(p, pts[0]));
      break;
    }
  if (dir.empty()) return 0;
  std::size_t k = 0;
  while (is_zero(dir[k])) ++k;
  Scalar lo = 0, hi = 0;
  for (const auto &p : pts) {
    Scalar t = (p[k] - pts[0][k]) / dir[k];
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  Scalar len = hi - lo;
  if (len.get_den() != 1) throw Error(ErrorKind::InternalCheck, "dual edge endpoints are not lattice points");
  return len.get_num();
}

} // namespace

WeightedComplex tropicalize_hypersurface(const TropicalPolynomial &f) {
  const std::size_t n = f.num_vars;
  if (f.terms.size() < 2) throw Error(ErrorKind::DegenerateInput, "a hypersurface needs at least two terms");
  std::set<Vec, VecLess> exps;
  for (const auto &t : f.terms) {
    if (t.exponent.size() != n) throw Error(ErrorKind::DimensionMismatch, "exponent of wrong length");
    if (!is_integral(t.exponent)) throw Error(ErrorKind::DegenerateInput, "exponents must be integral");
    if (!exps.insert(t.exponent).second) throw Error(ErrorKind::DegenerateInput, "repeated exponent");
  }
  const std::size_t m = f.terms.size();
  std::vector<Polyhedron> facets;
  std::vector<Integer> weights;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto &ti = f.terms[i];
      const auto &tj = f.terms[j];
      std::vector<Halfspace> rows;
      for (std::size_t k = 0; k < m; ++k) {
        if (k == i) continue;
        rows.push_back({sub(ti.exponent, f.terms[k].exponent), f.terms[k].val - ti.val});
      }
      rows.push_back({sub(tj.exponent, ti.exponent), ti.val - tj.val});
      Polyhedron cell(n, rows);
      if (cell.dimension() != static_cast<int>(n) - 1) continue;
      if (!seen.insert(cell.key()).second) continue;
      const Vec &w = cell.facial().relint_point;
      Scalar best = f.evaluate(w);
      std::vector<Vec> dual;
      for (const auto &t : f.terms)
        if (t.val + dot(t.exponent, w) == best) dual.push_back(t.exponent);
      facets.push_back(cell);
      weights.push_back(lattice_length(dual));
    }
  return WeightedComplex::make(n, static_cast<int>(n) - 1, facets, weights);
}

Verdict<Polyhedron> check_balancing(const WeightedComplex &c) {
  const std::size_t n = c.ambient_dim;
  for (const auto &r : c.ridges()) {
    std::vector<Vec> q = quotient_basis(n, r.cell.direction_basis());
    Vec rp = apply_rows(q, r.cell.facial().relint_point);
    Vec total = zero_vec(q.size());
    for (auto i : r.facets) {
      Vec u = primitive(sub(apply_rows(q, c.facets[i].facial().relint_point), rp));
      total = add(total, scaled(u, Scalar(c.weights[i])));
    }
    if (!is_zero(total)) return Verdict<Polyhedron>::no(r.cell);
  }
  return Verdict<Polyhedron>::yes();
}

std::vector<Component> intersect_components(const WeightedComplex &a, const WeightedComplex &b) {
  if (a.ambient_dim != b.ambient_dim) throw Error(ErrorKind::DimensionMismatch, "complexes of different dimension");
  std::vector<Polyhedron> pieces;
  std::set<std::string> seen;
  for (const auto &f : a.facets)
    for (const auto &g : b.facets) {
      Polyhedron x = intersect(f, g);
      if (x.is_empty() || !seen.insert(x.key()).second) continue;
      pieces.push_back(x.minimized());
    }
  // drop pieces inside others, larger dimension first
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const Polyhedron &x, const Polyhedron &y) { return x.dimension() > y.dimension(); });
  std::vector<Polyhedron> cells;
  for (const auto &p : pieces)
    if (std::none_of(cells.begin(), cells.end(), [&](const Polyhedron &c) { return c.contains(p); })) cells.push_back(p);

  std::vector<std::size_t> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j)
      if (!intersect(cells[i], cells[j]).is_empty()) parent[find(i)] = find(j);

  std::map<std::size_t, std::size_t> slot;
  std::vector<Component> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto [it, fresh] = slot.emplace(find(i), out.size());
    if (fresh) out.push_back({});
    Component &comp = out[it->second];
    comp.cells.push_back(cells[i]);
    comp.bounded = comp.bounded && cells[i].is_bounded();
  }
  return out;
}

PolyCollection support(const WeightedComplex &c) { return {c.ambient_dim, c.facets}; }

} // namespace troplift
