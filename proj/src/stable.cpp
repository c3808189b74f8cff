#include "troplift/stable.hpp"

#include "troplift/lattice.hpp"
#include "troplift/linalg.hpp"

#include <algorithm>

namespace troplift {

Integer StableResult::total() const {
  Integer t = 0;
  for (const auto &[x, m] : points) t += m;
  return t;
}

Vec moment_vector(std::size_t n, std::size_t k) {
  Vec v(n);
  Scalar p = 1;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = p;
    p *= Scalar(static_cast<long>(k));
  }
  return v;
}

namespace {

Vec pad(const Vec &x, std::size_t offset, std::size_t total) {
  Vec out(total, Scalar(0));
  std::copy(x.begin(), x.end(), out.begin() + static_cast<std::ptrdiff_t>(offset));
  return out;
}

// A cell given as a product of factor cells (a single factor for ordinary
// complexes); its polyhedron is only built on demand.
struct CellInfo {
  std::vector<const Polyhedron *> parts;
  std::vector<Vec> dirs;

  Polyhedron build() const {
    Polyhedron p = *parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) p = product(p, *parts[i]);
    return p;
  }
};

struct FacetInfo {
  std::vector<Halfspace> eqs;    // implicit equalities, as equations
  std::vector<Halfspace> strict; // facet rows
  std::vector<Vec> lattice;      // saturated direction lattice basis
  Integer weight;
};

FacetInfo facet_info(const Polyhedron &p, const Integer &w) {
  FacetInfo f;
  f.eqs = p.equations();
  for (auto i : p.facial().facets) f.strict.push_back(p.ineqs()[i]);
  f.lattice = p.direction_lattice();
  f.weight = w;
  return f;
}

FacetInfo product_info(const std::vector<const FacetInfo *> &parts, std::size_t n) {
  FacetInfo f;
  f.weight = 1;
  const std::size_t total = n * parts.size();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (const auto &h : parts[k]->eqs) f.eqs.push_back({pad(h.normal, k * n, total), h.offset});
    for (const auto &h : parts[k]->strict) f.strict.push_back({pad(h.normal, k * n, total), h.offset});
    for (const auto &l : parts[k]->lattice) f.lattice.push_back(pad(l, k * n, total));
    f.weight *= parts[k]->weight;
  }
  return f;
}

std::vector<CellInfo> cell_infos(const std::vector<Polyhedron> &cells) {
  std::vector<CellInfo> out;
  for (const auto &c : cells) out.push_back({{&c}, c.direction_basis()});
  return out;
}

// Joint polyhedron {(r, x) : x ∈ f, x + r v ∈ g}, parameter first.
Polyhedron translate_family(const Polyhedron &f, const Polyhedron &g, const Vec &v) {
  const std::size_t n = f.ambient_dim();
  std::vector<Halfspace> rows;
  for (const auto &h : f.ineqs()) {
    Vec a{Scalar(0)};
    a.insert(a.end(), h.normal.begin(), h.normal.end());
    rows.push_back({a, h.offset});
  }
  for (const auto &h : g.ineqs()) {
    Vec a{dot(h.normal, v)};
    a.insert(a.end(), h.normal.begin(), h.normal.end());
    rows.push_back({a, h.offset});
  }
  return Polyhedron(n + 1, rows);
}

struct AdmissibilityOutcome {
  std::optional<std::pair<std::size_t, std::size_t>> failure;
  std::vector<CertificateEntry> certificate;
};

AdmissibilityOutcome admissibility(const std::vector<CellInfo> &ca, const std::vector<CellInfo> &cb,
                                   std::size_t n, const Vec &v) {
  AdmissibilityOutcome out;
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j) {
      std::vector<Vec> joint = ca[i].dirs;
      joint.insert(joint.end(), cb[j].dirs.begin(), cb[j].dirs.end());
      std::size_t r = rank_of(joint);
      if (r == n) continue;
      joint.push_back(v);
      if (rank_of(joint) > r) continue; // the translates meet for at most one r
      Interval params = parameter_set(translate_family(ca[i].build(), cb[j].build(), v), 0);
      out.certificate.push_back({i, j, params});
      if (!params.empty && !params.is_point()) {
        out.failure = std::make_pair(i, j);
        return out;
      }
    }
  return out;
}

std::vector<Contribution> contributions(const std::vector<FacetInfo> &fa, const std::vector<FacetInfo> &fb,
                                        std::size_t n, const Vec &v) {
  std::vector<Contribution> out;
  const EpsScalar eps = EpsScalar::epsilon();
  for (std::size_t i = 0; i < fa.size(); ++i)
    for (std::size_t j = 0; j < fb.size(); ++j) {
      const FacetInfo &p = fa[i];
      const FacetInfo &q = fb[j];
      auto index = lattice_index(IntMatrix::from_columns(n, p.lattice), IntMatrix::from_columns(n, q.lattice), n);
      if (!index) continue;
      // x ∈ aff(q) and x - eps v ∈ aff(p)
      Matrix<EpsScalar> m;
      std::vector<EpsScalar> rhs;
      for (const auto &h : q.eqs) {
        m.emplace_back(h.normal.begin(), h.normal.end());
        rhs.emplace_back(h.offset);
      }
      for (const auto &h : p.eqs) {
        m.emplace_back(h.normal.begin(), h.normal.end());
        rhs.push_back(EpsScalar(h.offset) + eps * EpsScalar(dot(h.normal, v)));
      }
      if (rank_of(m, n) != n)
        throw Error(ErrorKind::InternalCheck, "affine spans of a full-span facet pair do not meet in a point");
      auto x = solve_linear(m, rhs, n);
      if (!x) throw Error(ErrorKind::InternalCheck, "affine spans of a full-span facet pair are disjoint");
      auto slack = [&](const Halfspace &h, bool shifted) {
        EpsScalar s(h.offset);
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(h.normal[k])) s -= EpsScalar(h.normal[k]) * (*x)[k];
        if (shifted) s += eps * EpsScalar(dot(h.normal, v));
        return s.sign();
      };
      bool inside = true, boundary = false;
      for (const auto &h : q.strict) {
        int s = slack(h, false);
        inside = inside && s >= 0;
        boundary = boundary || s == 0;
      }
      for (const auto &h : p.strict) {
        int s = slack(h, true);
        inside = inside && s >= 0;
        boundary = boundary || s == 0;
      }
      if (!inside) continue;
      if (boundary) throw Error(ErrorKind::InternalCheck, "displaced intersection is not transverse");
      Vec limit(n);
      for (std::size_t k = 0; k < n; ++k) {
        const EpsScalar &c = (*x)[k];
        if (!c.is_polynomial() || c.num().degree() > 1)
          throw Error(ErrorKind::InternalCheck, "displaced intersection is not affine in eps");
        limit[k] = c.limit();
      }
      Integer mult = *index * p.weight * q.weight;
      out.push_back({i, j, *x, limit, mult});
    }
  return out;
}

std::vector<FacetInfo> facet_infos(const WeightedComplex &c) {
  std::vector<FacetInfo> out;
  for (std::size_t i = 0; i < c.facets.size(); ++i) out.push_back(facet_info(c.facets[i], c.weights[i]));
  return out;
}

void check_pair(const WeightedComplex &a, const WeightedComplex &b) {
  if (a.ambient_dim != b.ambient_dim) throw Error(ErrorKind::DimensionMismatch, "cycles in different ambient spaces");
  if (static_cast<std::size_t>(a.pure_dim + b.pure_dim) != a.ambient_dim)
    throw Error(ErrorKind::DimensionMismatch, "cycle dimensions are not complementary");
}

Displacement pick_from(const std::vector<CellInfo> &ca, const std::vector<CellInfo> &cb, std::size_t n) {
  for (std::size_t k = 1;; ++k) {
    Vec v = moment_vector(n, k);
    auto res = admissibility(ca, cb, n, v);
    if (!res.failure) return {v, k, std::move(res.certificate)};
  }
}

StableResult accumulate(const std::vector<Contribution> &cs) {
  StableResult r;
  for (const auto &c : cs) r.points[c.limit] += c.mult;
  return r;
}

} // namespace

Verdict<std::pair<std::size_t, std::size_t>> check_admissible(const WeightedComplex &a, const WeightedComplex &b,
                                                              const Vec &v) {
  if (v.size() != a.ambient_dim) throw Error(ErrorKind::DimensionMismatch, "displacement of wrong length");
  auto cells_a = a.cells(), cells_b = b.cells();
  auto res = admissibility(cell_infos(cells_a), cell_infos(cells_b), a.ambient_dim, v);
  if (res.failure) return Verdict<std::pair<std::size_t, std::size_t>>::no(*res.failure);
  return Verdict<std::pair<std::size_t, std::size_t>>::yes();
}

std::optional<Displacement> certify(const WeightedComplex &a, const WeightedComplex &b, const Vec &v) {
  if (v.size() != a.ambient_dim) throw Error(ErrorKind::DimensionMismatch, "displacement of wrong length");
  auto cells_a = a.cells(), cells_b = b.cells();
  auto res = admissibility(cell_infos(cells_a), cell_infos(cells_b), a.ambient_dim, v);
  if (res.failure) return std::nullopt;
  return Displacement{v, 0, std::move(res.certificate)};
}

Displacement pick_generic_vector(const WeightedComplex &a, const WeightedComplex &b) {
  check_pair(a, b);
  auto cells_a = a.cells(), cells_b = b.cells();
  return pick_from(cell_infos(cells_a), cell_infos(cells_b), a.ambient_dim);
}

Integer transverse_multiplicity(const Polyhedron &p, const Integer &wp, const Polyhedron &q, const Integer &wq) {
  const std::size_t n = p.ambient_dim();
  if (q.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "polyhedra in different spaces");
  if (p.dimension() + q.dimension() != static_cast<int>(n))
    throw Error(ErrorKind::NotTransverse, "dimensions are not complementary");
  auto index = lattice_index(IntMatrix::from_columns(n, p.direction_lattice()),
                             IntMatrix::from_columns(n, q.direction_lattice()), n);
  if (!index) throw Error(ErrorKind::NotTransverse, "direction spaces do not span");
  Matrix<Scalar> m;
  Vec rhs;
  for (const auto &h : p.equations()) {
    m.push_back(h.normal);
    rhs.push_back(h.offset);
  }
  for (const auto &h : q.equations()) {
    m.push_back(h.normal);
    rhs.push_back(h.offset);
  }
  auto x = solve_linear(m, rhs, n);
  if (!x || !p.contains_relint(*x) || !q.contains_relint(*x))
    throw Error(ErrorKind::NotTransverse, "affine spans do not meet in the relative interiors");
  return *index * wp * wq;
}

std::vector<Contribution> stable_contributions(const WeightedComplex &a, const WeightedComplex &b, const Vec &v) {
  check_pair(a, b);
  if (v.size() != a.ambient_dim) throw Error(ErrorKind::DimensionMismatch, "displacement of wrong length");
  return contributions(facet_infos(a), facet_infos(b), a.ambient_dim, v);
}

StableResult stable_intersect(const WeightedComplex &a, const WeightedComplex &b,
                              const std::optional<Displacement> &v) {
  check_pair(a, b);
  Vec dir;
  if (v) {
    if (!check_admissible(a, b, v->v)) throw Error(ErrorKind::NotAdmissible, "displacement " + to_string(v->v) + " is not generic");
    dir = v->v;
  } else {
    dir = pick_generic_vector(a, b).v;
  }
  return accumulate(contributions(facet_infos(a), facet_infos(b), a.ambient_dim, dir));
}

WeightedComplex diagonal(std::size_t n, std::size_t m) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) {
    Vec d(n * m, Scalar(0));
    for (std::size_t k = 0; k < m; ++k) d[k * n + i] = 1;
    basis.push_back(d);
  }
  return WeightedComplex::make(n * m, static_cast<int>(n), {Polyhedron::subspace(n * m, basis)}, {1});
}

StableResult stable_intersect_multi(const std::vector<WeightedComplex> &cycles) {
  const std::size_t m = cycles.size();
  if (m < 2) throw Error(ErrorKind::DimensionMismatch, "at least two cycles are required");
  const std::size_t n = cycles[0].ambient_dim;
  std::size_t dims = 0;
  for (const auto &c : cycles) {
    if (c.ambient_dim != n) throw Error(ErrorKind::DimensionMismatch, "cycles in different ambient spaces");
    dims += static_cast<std::size_t>(c.pure_dim);
  }
  if (dims != (m - 1) * n) throw Error(ErrorKind::DimensionMismatch, "codimensions do not add up to the ambient dimension");
  for (const auto &c : cycles)
    if (c.empty()) return {};

  const std::size_t big = n * m;
  WeightedComplex diag = diagonal(n, m);

  // product cells and facets, enumerated factor by factor
  std::vector<std::vector<Polyhedron>> cells(m);
  std::vector<std::vector<std::vector<Vec>>> cell_dirs(m);
  std::vector<std::vector<FacetInfo>> facets(m);
  for (std::size_t k = 0; k < m; ++k) {
    cells[k] = cycles[k].cells();
    for (const auto &c : cells[k]) {
      std::vector<Vec> d;
      for (const auto &b : c.direction_basis()) d.push_back(pad(b, k * n, big));
      cell_dirs[k].push_back(d);
    }
    facets[k] = facet_infos(cycles[k]);
  }
  std::vector<CellInfo> prod_cells;
  std::vector<FacetInfo> prod_facets;
  std::vector<std::size_t> idx(m, 0);
  for (;;) {
    CellInfo ci;
    for (std::size_t k = 0; k < m; ++k) {
      ci.parts.push_back(&cells[k][idx[k]]);
      ci.dirs.insert(ci.dirs.end(), cell_dirs[k][idx[k]].begin(), cell_dirs[k][idx[k]].end());
    }
    prod_cells.push_back(std::move(ci));
    std::size_t k = 0;
    while (k < m && ++idx[k] == cells[k].size()) idx[k++] = 0;
    if (k == m) break;
  }
  std::fill(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<const FacetInfo *> parts;
    for (std::size_t k = 0; k < m; ++k) parts.push_back(&facets[k][idx[k]]);
    prod_facets.push_back(product_info(parts, n));
    std::size_t k = 0;
    while (k < m && ++idx[k] == facets[k].size()) idx[k++] = 0;
    if (k == m) break;
  }

  auto diag_cells = diag.cells();
  Displacement v = pick_from(prod_cells, cell_infos(diag_cells), big);
  StableResult big_result = accumulate(contributions(prod_facets, facet_infos(diag), big, v.v));
  StableResult out;
  for (const auto &[x, mult] : big_result.points) {
    Vec y(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t k = 1; k < m; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (x[k * n + i] != y[i]) throw Error(ErrorKind::InternalCheck, "stable point off the diagonal");
    out.points[y] += mult;
  }
  return out;
}

} // namespace troplift
