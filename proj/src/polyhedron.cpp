#include "troplift/polyhedron.hpp"

#include "troplift/lattice.hpp"
#include "troplift/linalg.hpp"
#include "troplift/lp.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace troplift {

namespace detail {
struct PolyCache {
  std::once_flag facial_once, gens_once, key_once;
  std::atomic<bool> gens_ready{false};
  FacialData facial;
  Generators gens;
  std::string key;
};
} // namespace detail

namespace {

using Lp = LinearProgram<Scalar>;

void check_dim(std::size_t n, const Vec &v, const char *what) {
  if (v.size() != n)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " has length " + std::to_string(v.size()) + ", expected " +
                    std::to_string(n));
}

std::vector<Halfspace> normalize_rows(std::size_t n, std::vector<Halfspace> rows) {
  bool infeasible = false;
  std::map<Vec, Scalar, VecLess> best;
  for (auto &h : rows) {
    check_dim(n, h.normal, "inequality normal");
    if (is_zero(h.normal)) {
      if (sgn(h.offset) < 0) infeasible = true;
      continue;
    }
    Scalar f = primitive_factor(h.normal);
    Vec a = scaled(h.normal, f);
    Scalar b = h.offset * f;
    auto it = best.find(a);
    if (it == best.end()) best.emplace(std::move(a), std::move(b));
    else if (b < it->second) it->second = b;
  }
  if (infeasible) return {Halfspace{zero_vec(n), Scalar(-1)}};
  std::vector<Halfspace> out;
  out.reserve(best.size());
  for (auto &[a, b] : best) out.push_back({a, b});
  return out;
}

LinearRow<Scalar> lrow(const Halfspace &h) { return {h.normal, h.offset}; }

Lp lp_over(std::size_t n, const std::vector<Halfspace> &rows) {
  Lp lp;
  lp.num_vars = n;
  for (const auto &h : rows) lp.ineqs.push_back(lrow(h));
  return lp;
}

// ---- double description -------------------------------------------------

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits &b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

struct DdRay {
  Vec v;
  Bits z; // processed constraints tight at v
};

struct ConeGens {
  std::vector<Vec> rays;
  std::vector<Vec> lineality;
};

// Generators of {y in Q^d : <g, y> <= 0 for all g in cons} by the
// double-description method. Lineality is split off first so the adjacency
// test runs on a pointed cone.
ConeGens dd_cone(std::size_t d, const std::vector<Vec> &cons) {
  std::vector<Vec> lin;
  for (std::size_t i = 0; i < d; ++i) lin.push_back(unit_vec(d, i));
  std::vector<DdRay> rays;
  const std::size_t words = (cons.size() + 63) / 64 + 1;
  std::vector<std::size_t> processed;

  for (std::size_t c = 0; c < cons.size(); ++c) {
    const Vec &g = cons[c];
    if (is_zero(g)) continue;
    std::size_t li = lin.size();
    for (std::size_t k = 0; k < lin.size(); ++k)
      if (!is_zero(dot(g, lin[k]))) {
        li = k;
        break;
      }
    if (li < lin.size()) {
      Vec l0 = lin[li];
      Scalar gl0 = dot(g, l0);
      if (sgn(gl0) > 0) {
        l0 = negated(l0);
        gl0 = -gl0;
      }
      lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(li));
      for (auto &l : lin) {
        Scalar gl = dot(g, l);
        if (!is_zero(gl)) l = sub(l, scaled(l0, gl / gl0));
      }
      for (auto &r : rays) {
        Scalar gr = dot(g, r.v);
        if (!is_zero(gr)) r.v = primitive(sub(r.v, scaled(l0, gr / gl0)));
        set_bit(r.z, c);
      }
      DdRay nr{primitive(l0), Bits(words, 0)};
      for (auto pc : processed) set_bit(nr.z, pc);
      rays.push_back(std::move(nr));
    } else {
      std::vector<Scalar> val(rays.size());
      std::vector<std::size_t> pos, neg;
      std::vector<DdRay> next;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        val[i] = dot(g, rays[i].v);
        int s = sgn(val[i]);
        if (s > 0) pos.push_back(i);
        else {
          if (s < 0) neg.push_back(i);
          next.push_back(rays[i]);
          if (s == 0) set_bit(next.back().z, c);
        }
      }
      const std::size_t pointed = d - lin.size();
      const std::size_t need = pointed >= 2 ? pointed - 2 : 0;
      Bits common(words);
      for (auto p : pos)
        for (auto q : neg) {
          std::size_t cnt = 0;
          for (std::size_t w = 0; w < words; ++w) {
            common[w] = rays[p].z[w] & rays[q].z[w];
            cnt += static_cast<std::size_t>(std::popcount(common[w]));
          }
          if (cnt < need) continue;
          bool adjacent = true;
          for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
            if (r == p || r == q) continue;
            bool sub_set = true;
            for (std::size_t w = 0; w < words && sub_set; ++w)
              if ((common[w] & ~rays[r].z[w]) != 0) sub_set = false;
            if (sub_set) adjacent = false;
          }
          if (!adjacent) continue;
          Vec v = sub(scaled(rays[q].v, val[p]), scaled(rays[p].v, val[q]));
          DdRay nr{primitive(v), common};
          set_bit(nr.z, c);
          next.push_back(std::move(nr));
        }
      rays = std::move(next);
    }
    processed.push_back(c);
  }
  ConeGens out;
  for (auto &r : rays) out.rays.push_back(std::move(r.v));
  out.lineality = std::move(lin);
  return out;
}

std::vector<Vec> canonical_lineality(std::size_t n, const std::vector<Vec> &lin) {
  std::vector<Vec> basis = span_basis(n, lin);
  for (auto &b : basis) b = primitive(b);
  return basis;
}

Generators compute_generators(const Polyhedron &p) {
  const std::size_t n = p.ambient_dim();
  Generators g;
  for (const auto &h : p.ineqs())
    if (is_zero(h.normal)) return g;
  std::vector<Vec> cons;
  Vec lam(n + 1);
  lam[n] = -1;
  cons.push_back(lam);
  for (const auto &h : p.ineqs()) {
    Vec c = h.normal;
    c.push_back(-h.offset);
    cons.push_back(std::move(c));
  }
  ConeGens cg = dd_cone(n + 1, cons);
  for (const auto &r : cg.rays) {
    Vec x(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
    if (sgn(r[n]) > 0) g.points.push_back(scaled(x, Scalar(1) / r[n]));
    else g.rays.push_back(primitive(x));
  }
  if (g.points.empty()) return {};
  for (const auto &l : cg.lineality) g.lineality.emplace_back(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(n));
  g.lineality = canonical_lineality(n, g.lineality);
  std::sort(g.points.begin(), g.points.end(), VecLess{});
  std::sort(g.rays.begin(), g.rays.end(), VecLess{});
  return g;
}

// ---- facial structure ----------------------------------------------------

LpResult<Scalar> max_slack(std::size_t n, const std::vector<Halfspace> &rows,
                           const std::vector<bool> &is_eq) {
  Lp lp;
  lp.num_vars = n + 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Vec a = rows[i].normal;
    a.push_back(is_eq[i] ? Scalar(0) : Scalar(1));
    if (is_eq[i]) lp.eqs.push_back({std::move(a), rows[i].offset});
    else lp.ineqs.push_back({std::move(a), rows[i].offset});
  }
  lp.ineqs.push_back({unit_vec(n + 1, n), Scalar(1)});
  lp.maximize = unit_vec(n + 1, n);
  return lp_solve(lp);
}

FacialData compute_facial(std::size_t n, const std::vector<Halfspace> &rows) {
  FacialData fd;
  for (const auto &h : rows)
    if (is_zero(h.normal)) return fd;
  if (rows.empty()) {
    fd.empty = false;
    fd.dim = static_cast<int>(n);
    fd.relint_point = zero_vec(n);
    return fd;
  }
  const std::size_t m = rows.size();
  std::vector<bool> eq(m, false);
  auto r = max_slack(n, rows, eq);
  if (r.status != LpStatus::Feasible || sgn(*r.value) < 0) return fd;
  fd.empty = false;
  if (sgn(*r.value) == 0) {
    std::vector<bool> slack(m, false);
    auto mark = [&](const Vec &x) {
      for (std::size_t i = 0; i < m; ++i)
        if (dot(rows[i].normal, x) < rows[i].offset) slack[i] = true;
    };
    mark(Vec(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(n)));
    for (std::size_t i = 0; i < m; ++i) {
      if (slack[i]) continue;
      Lp lp = lp_over(n, rows);
      lp.maximize = negated(rows[i].normal);
      auto ri = lp_solve(lp);
      if (ri.status == LpStatus::Unbounded || *ri.value > -rows[i].offset) {
        slack[i] = true;
        mark(ri.point);
      } else {
        eq[i] = true;
      }
    }
    r = max_slack(n, rows, eq);
    if (r.status != LpStatus::Feasible || sgn(*r.value) <= 0)
      throw Error(ErrorKind::InternalCheck, "relative interior LP lost feasibility");
  }
  fd.relint_point.assign(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<Vec> eq_normals;
  std::vector<Halfspace> eq_rows;
  for (std::size_t i = 0; i < m; ++i)
    if (eq[i]) {
      fd.equalities.push_back(i);
      eq_normals.push_back(rows[i].normal);
      eq_rows.push_back(rows[i]);
    }
  fd.dim = static_cast<int>(n - rank_of(eq_normals));

  std::vector<bool> alive(m, false);
  for (std::size_t i = 0; i < m; ++i) alive[i] = !eq[i];
  for (std::size_t i = 0; i < m; ++i) {
    if (eq[i]) continue;
    Lp lp;
    lp.num_vars = n;
    for (std::size_t k = 0; k < m; ++k)
      if (alive[k] && k != i) lp.ineqs.push_back(lrow(rows[k]));
    for (const auto &h : eq_rows) lp.eqs.push_back(lrow(h));
    lp.maximize = rows[i].normal;
    auto ri = lp_solve(lp);
    if (ri.status == LpStatus::Feasible && *ri.value <= rows[i].offset) alive[i] = false;
    else fd.facets.push_back(i);
  }
  return fd;
}

std::string vec_key(const Vec &v) { return to_string(v); }

} // namespace

// ---- Polyhedron ------------------------------------------------------------

Polyhedron::Polyhedron(std::size_t ambient_dim, std::vector<Halfspace> ineqs)
    : dim_(ambient_dim), ineqs_(normalize_rows(ambient_dim, std::move(ineqs))),
      cache_(std::make_shared<detail::PolyCache>()) {}

Polyhedron Polyhedron::universe(std::size_t n) { return Polyhedron(n, {}); }

Polyhedron Polyhedron::empty(std::size_t n) { return Polyhedron(n, {Halfspace{zero_vec(n), Scalar(-1)}}); }

Polyhedron Polyhedron::point(const Vec &p) {
  const std::size_t n = p.size();
  std::vector<Halfspace> rows;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back({unit_vec(n, i), p[i]});
    rows.push_back({negated(unit_vec(n, i)), -p[i]});
  }
  return Polyhedron(n, std::move(rows));
}

Polyhedron Polyhedron::subspace(std::size_t n, const std::vector<Vec> &basis) {
  for (const auto &b : basis) check_dim(n, b, "subspace generator");
  std::vector<Halfspace> rows;
  for (const auto &c : orthogonal_complement(n, basis)) {
    rows.push_back({c, Scalar(0)});
    rows.push_back({negated(c), Scalar(0)});
  }
  return Polyhedron(n, std::move(rows));
}

Polyhedron Polyhedron::from_generators(std::size_t n, const std::vector<Vec> &points,
                                       const std::vector<Vec> &rays,
                                       const std::vector<Vec> &lineality) {
  for (const auto &v : points) check_dim(n, v, "point");
  for (const auto &v : rays) check_dim(n, v, "ray");
  for (const auto &v : lineality) check_dim(n, v, "lineality vector");
  if (points.empty()) return empty(n);
  // polar cone of the homogenization: (a, beta) with <a, x> + beta <= 0 on generators
  std::vector<Vec> cons;
  for (const auto &v : points) {
    Vec c = v;
    c.emplace_back(1);
    cons.push_back(std::move(c));
  }
  for (const auto &v : rays) {
    Vec c = v;
    c.emplace_back(0);
    cons.push_back(std::move(c));
  }
  for (const auto &v : lineality) {
    Vec c = v;
    c.emplace_back(0);
    cons.push_back(c);
    cons.push_back(negated(c));
  }
  ConeGens polar = dd_cone(n + 1, cons);
  std::vector<Halfspace> rows;
  auto split = [&](const Vec &y) {
    return Halfspace{Vec(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n)), -y[n]};
  };
  for (const auto &y : polar.rays) rows.push_back(split(y));
  for (const auto &y : polar.lineality) {
    Halfspace h = split(y);
    rows.push_back(h);
    rows.push_back({negated(h.normal), -h.offset});
  }
  return Polyhedron(n, std::move(rows));
}

const FacialData &Polyhedron::facial() const {
  std::call_once(cache_->facial_once, [&] { cache_->facial = compute_facial(dim_, ineqs_); });
  return cache_->facial;
}

const Generators &Polyhedron::generators() const {
  std::call_once(cache_->gens_once, [&] {
    cache_->gens = compute_generators(*this);
    cache_->gens_ready.store(true, std::memory_order_release);
  });
  return cache_->gens;
}

bool Polyhedron::is_cone() const {
  if (is_empty() || !contains(zero_vec(dim_))) return false;
  Polyhedron m = minimized();
  for (const auto &h : m.ineqs())
    if (!is_zero(h.offset)) return false;
  return true;
}

bool Polyhedron::contains(const Vec &x) const {
  check_dim(dim_, x, "point");
  for (const auto &h : ineqs_)
    if (dot(h.normal, x) > h.offset) return false;
  return true;
}

bool Polyhedron::contains_relint(const Vec &x) const {
  if (!contains(x)) return false;
  const auto &fd = facial();
  std::vector<bool> eq(ineqs_.size(), false);
  for (auto i : fd.equalities) eq[i] = true;
  for (std::size_t i = 0; i < ineqs_.size(); ++i)
    if (!eq[i] && dot(ineqs_[i].normal, x) == ineqs_[i].offset) return false;
  return true;
}

bool Polyhedron::contains(const Polyhedron &q) const {
  if (q.ambient_dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "containment across dimensions");
  if (q.cache_->gens_ready.load(std::memory_order_acquire)) {
    // cheap path through the known V-representation of q
    const Generators &g = q.generators();
    if (g.points.empty()) return true;
    for (const auto &h : ineqs_) {
      for (const auto &v : g.points)
        if (dot(h.normal, v) > h.offset) return false;
      for (const auto &r : g.rays)
        if (sgn(dot(h.normal, r)) > 0) return false;
      for (const auto &l : g.lineality)
        if (!is_zero(dot(h.normal, l))) return false;
    }
    return true;
  }
  if (q.is_empty()) return true;
  if (is_empty()) return false;
  for (const auto &h : ineqs_) {
    Lp lp = lp_over(dim_, q.ineqs());
    lp.maximize = h.normal;
    auto r = lp_solve(lp);
    if (r.status == LpStatus::Unbounded || *r.value > h.offset) return false;
  }
  return true;
}

bool Polyhedron::same_set(const Polyhedron &q) const { return contains(q) && q.contains(*this); }

std::vector<Halfspace> Polyhedron::equations() const {
  const auto &fd = facial();
  if (fd.empty) return {};
  Matrix<Scalar> m;
  for (auto i : fd.equalities) {
    Vec r = ineqs_[i].normal;
    r.push_back(ineqs_[i].offset);
    m.push_back(std::move(r));
  }
  rref(m, dim_);
  std::vector<Halfspace> out;
  for (auto &r : m) {
    Halfspace h{Vec(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(dim_)), r[dim_]};
    Scalar f = primitive_factor(h.normal);
    out.push_back({scaled(h.normal, f), h.offset * f});
  }
  return out;
}

std::vector<Vec> Polyhedron::direction_basis() const {
  std::vector<Vec> normals;
  for (auto i : facial().equalities) normals.push_back(ineqs_[i].normal);
  return orthogonal_complement(dim_, normals);
}

std::vector<Vec> Polyhedron::direction_lattice() const {
  std::vector<Vec> normals;
  for (auto i : facial().equalities) normals.push_back(ineqs_[i].normal);
  return orthogonal_lattice_basis(dim_, normals);
}

Polyhedron Polyhedron::minimized() const {
  const auto &fd = facial();
  if (fd.empty) return empty(dim_);
  std::vector<Halfspace> rows;
  for (const auto &h : equations()) {
    rows.push_back(h);
    rows.push_back({negated(h.normal), -h.offset});
  }
  for (auto i : fd.facets) rows.push_back(ineqs_[i]);
  return Polyhedron(dim_, std::move(rows));
}

const std::string &Polyhedron::key() const {
  std::call_once(cache_->key_once, [&] {
    if (is_empty()) {
      cache_->key = "empty/" + std::to_string(dim_);
      return;
    }
    const Generators &g = generators();
    Matrix<Scalar> lin(g.lineality.begin(), g.lineality.end());
    std::vector<std::size_t> piv = rref(lin, dim_);
    // unique representative in the complement W = {x_p = 0 : p pivot}
    auto reduce = [&](Vec v) {
      for (std::size_t k = 0; k < piv.size(); ++k) {
        Scalar c = v[piv[k]];
        if (!is_zero(c))
          for (std::size_t j = 0; j < dim_; ++j) v[j] -= c * lin[k][j];
      }
      return v;
    };
    std::set<Vec, VecLess> pts, rays;
    for (const auto &v : g.points) pts.insert(reduce(v));
    for (const auto &v : g.rays) {
      Vec r = reduce(v);
      if (!is_zero(r)) rays.insert(primitive(r));
    }
    std::ostringstream os;
    os << dim_ << "|L";
    for (const auto &l : lin) os << vec_key(l);
    os << "|V";
    for (const auto &v : pts) os << vec_key(v);
    os << "|R";
    for (const auto &v : rays) os << vec_key(v);
    cache_->key = os.str();
  });
  return cache_->key;
}

std::string Polyhedron::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < ineqs_.size(); ++i) {
    if (i) os << "; ";
    os << to_string(ineqs_[i].normal) << ".x <= " << to_string(ineqs_[i].offset);
  }
  os << "}";
  return os.str();
}

// ---- Cone ------------------------------------------------------------------

Cone::Cone(Polyhedron p) : p_(std::move(p)) {
  for (const auto &h : p_.ineqs())
    if (!is_zero(h.offset))
      throw Error(ErrorKind::PreconditionFailed, "cone inequalities must have zero offsets");
}

Cone Cone::origin(std::size_t n) { return Cone(Polyhedron::subspace(n, {})); }

Cone Cone::from_rays(std::size_t n, const std::vector<Vec> &rays, const std::vector<Vec> &lineality) {
  return Cone(Polyhedron::from_generators(n, {zero_vec(n)}, rays, lineality));
}

// ---- operations ------------------------------------------------------------

Polyhedron intersect(const Polyhedron &a, const Polyhedron &b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "intersection across dimensions");
  std::vector<Halfspace> rows = a.ineqs();
  rows.insert(rows.end(), b.ineqs().begin(), b.ineqs().end());
  return Polyhedron(a.ambient_dim(), std::move(rows));
}

Polyhedron translate(const Polyhedron &p, const Vec &v) {
  check_dim(p.ambient_dim(), v, "translation");
  std::vector<Halfspace> rows;
  for (const auto &h : p.ineqs()) rows.push_back({h.normal, h.offset + dot(h.normal, v)});
  return Polyhedron(p.ambient_dim(), std::move(rows));
}

Polyhedron scale(const Polyhedron &p, const Scalar &t) {
  if (sgn(t) == 0) return p.is_empty() ? p : Polyhedron::point(zero_vec(p.ambient_dim()));
  std::vector<Halfspace> rows;
  for (const auto &h : p.ineqs()) {
    if (sgn(t) > 0) rows.push_back({h.normal, h.offset * t});
    else rows.push_back({negated(h.normal), -h.offset * t});
  }
  return Polyhedron(p.ambient_dim(), std::move(rows));
}

Polyhedron with_equation(const Polyhedron &p, const Halfspace &eq) {
  std::vector<Halfspace> rows = p.ineqs();
  rows.push_back(eq);
  rows.push_back({negated(eq.normal), -eq.offset});
  return Polyhedron(p.ambient_dim(), std::move(rows));
}

Polyhedron product(const Polyhedron &a, const Polyhedron &b) {
  const std::size_t na = a.ambient_dim(), nb = b.ambient_dim();
  std::vector<Halfspace> rows;
  for (const auto &h : a.ineqs()) {
    Vec v = h.normal;
    v.resize(na + nb);
    rows.push_back({std::move(v), h.offset});
  }
  for (const auto &h : b.ineqs()) {
    Vec v(na);
    v.insert(v.end(), h.normal.begin(), h.normal.end());
    rows.push_back({std::move(v), h.offset});
  }
  return Polyhedron(na + nb, std::move(rows));
}

Cone recession_cone(const Polyhedron &p) {
  if (p.is_empty()) throw Error(ErrorKind::EmptyInput, "recession cone of an empty polyhedron");
  std::vector<Halfspace> rows;
  for (const auto &h : p.ineqs()) rows.push_back({h.normal, Scalar(0)});
  return Cone(Polyhedron(p.ambient_dim(), std::move(rows)).minimized());
}

RelintPoint relint_point(const Polyhedron &p) {
  const auto &fd = p.facial();
  if (fd.empty) throw Error(ErrorKind::EmptyInput, "relative interior of an empty polyhedron");
  return {fd.relint_point, static_cast<std::size_t>(fd.dim)};
}

std::vector<Vec> vertices(const Polyhedron &p) {
  if (p.is_empty()) throw Error(ErrorKind::EmptyInput, "vertices of an empty polyhedron");
  if (!p.is_pointed()) throw Error(ErrorKind::NotPointed, "polyhedron contains a line");
  return p.generators().points;
}

Polyhedron minkowski_sum(const Polyhedron &p, const Cone &c) {
  if (p.ambient_dim() != c.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "Minkowski sum across dimensions");
  if (p.is_empty()) return p;
  const Generators &g = p.generators();
  const Generators &h = c.poly().generators();
  std::vector<Vec> rays = g.rays, lin = g.lineality;
  rays.insert(rays.end(), h.rays.begin(), h.rays.end());
  lin.insert(lin.end(), h.lineality.begin(), h.lineality.end());
  return Polyhedron::from_generators(p.ambient_dim(), g.points, rays, lin);
}

// ---- Fourier-Motzkin -------------------------------------------------------

namespace {

struct SysRow {
  Vec a;
  Scalar b;
  bool eq;
};

class FmSystem {
public:
  FmSystem(std::size_t nv, std::vector<SysRow> rows) : nv_(nv), rows_(std::move(rows)) { normalize(); }

  bool infeasible() const { return infeasible_; }
  const std::vector<SysRow> &rows() const { return rows_; }

  void eliminate(std::size_t j) {
    if (infeasible_) return;
    std::size_t e = rows_.size();
    std::size_t best_nnz = nv_ + 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!rows_[i].eq || is_zero(rows_[i].a[j])) continue;
      std::size_t nnz = 0;
      for (const auto &x : rows_[i].a) nnz += is_zero(x) ? 0 : 1;
      if (nnz < best_nnz) {
        best_nnz = nnz;
        e = i;
      }
    }
    if (e < rows_.size()) {
      SysRow er = rows_[e];
      rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(e));
      for (auto &r : rows_) {
        if (is_zero(r.a[j])) continue;
        Scalar f = r.a[j] / er.a[j];
        r.a = sub(r.a, scaled(er.a, f));
        r.b -= f * er.b;
      }
      normalize();
      return;
    }
    std::vector<SysRow> pos, neg, next;
    for (auto &r : rows_) {
      int s = sgn(r.a[j]);
      if (s > 0) pos.push_back(std::move(r));
      else if (s < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const auto &p : pos)
      for (const auto &q : neg) {
        Scalar fp = -q.a[j], fq = p.a[j];
        next.push_back({add(scaled(p.a, fp), scaled(q.a, fq)), p.b * fp + q.b * fq, false});
        next.back().a[j] = 0;
      }
    rows_ = std::move(next);
    normalize();
    if (!pos.empty() && !neg.empty()) prune();
  }

  // LP redundancy removal on the inequality rows.
  void prune() {
    if (infeasible_) return;
    auto build = [&](std::size_t skip, const std::vector<bool> &alive) {
      Lp lp;
      lp.num_vars = nv_;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i == skip || !alive[i]) continue;
        (rows_[i].eq ? lp.eqs : lp.ineqs).push_back({rows_[i].a, rows_[i].b});
      }
      return lp;
    };
    std::vector<bool> alive(rows_.size(), true);
    if (!lp_solve(build(rows_.size(), alive)).feasible()) {
      infeasible_ = true;
      rows_.clear();
      return;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].eq) continue;
      Lp lp = build(i, alive);
      lp.maximize = rows_[i].a;
      auto r = lp_solve(lp);
      if (r.status == LpStatus::Feasible && *r.value <= rows_[i].b) alive[i] = false;
    }
    std::vector<SysRow> kept;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (alive[i]) kept.push_back(std::move(rows_[i]));
    rows_ = std::move(kept);
  }

private:
  void normalize() {
    std::map<Vec, Scalar, VecLess> ineq;
    std::set<std::pair<Vec, Scalar>, std::function<bool(const std::pair<Vec, Scalar> &,
                                                        const std::pair<Vec, Scalar> &)>>
        eqs([](const auto &x, const auto &y) {
          if (VecLess{}(x.first, y.first)) return true;
          if (VecLess{}(y.first, x.first)) return false;
          return x.second < y.second;
        });
    for (auto &r : rows_) {
      if (is_zero(r.a)) {
        if (r.eq ? !is_zero(r.b) : sgn(r.b) < 0) {
          infeasible_ = true;
          rows_.clear();
          return;
        }
        continue;
      }
      Scalar f = primitive_factor(r.a);
      Vec a = scaled(r.a, f);
      Scalar b = r.b * f;
      if (r.eq) {
        std::size_t k = 0;
        while (is_zero(a[k])) ++k;
        if (sgn(a[k]) < 0) {
          a = negated(a);
          b = -b;
        }
        eqs.insert({std::move(a), std::move(b)});
      } else {
        auto it = ineq.find(a);
        if (it == ineq.end()) ineq.emplace(std::move(a), std::move(b));
        else if (b < it->second) it->second = b;
      }
    }
    rows_.clear();
    for (const auto &[a, b] : eqs) rows_.push_back({a, b, true});
    for (const auto &[a, b] : ineq) rows_.push_back({a, b, false});
  }

  std::size_t nv_;
  std::vector<SysRow> rows_;
  bool infeasible_ = false;
};

// Choose the next variable among `todo`: one that an equality can substitute
// away, otherwise the one producing the fewest Fourier-Motzkin rows.
std::size_t pick_variable(const FmSystem &sys, const std::vector<std::size_t> &todo) {
  std::size_t best = 0;
  long best_cost = 0;
  for (std::size_t t = 0; t < todo.size(); ++t) {
    long p = 0, q = 0;
    for (const auto &r : sys.rows()) {
      int s = sgn(r.a[todo[t]]);
      if (s == 0) continue;
      if (r.eq) return t;
      if (s > 0) ++p;
      else ++q;
    }
    long cost = p * q - p - q;
    if (t == 0 || cost < best_cost) {
      best_cost = cost;
      best = t;
    }
  }
  return best;
}

} // namespace

Polyhedron project_linear(const Polyhedron &p, const std::vector<Vec> &map_rows) {
  const std::size_t n = p.ambient_dim(), k = map_rows.size();
  for (const auto &r : map_rows) check_dim(n, r, "projection row");
  std::vector<SysRow> rows;
  for (const auto &h : p.ineqs()) {
    Vec a = h.normal;
    a.resize(n + k);
    rows.push_back({std::move(a), h.offset, false});
  }
  for (std::size_t i = 0; i < k; ++i) {
    Vec a = map_rows[i];
    a.resize(n + k);
    a[n + i] = -1;
    rows.push_back({std::move(a), Scalar(0), true});
  }
  FmSystem sys(n + k, std::move(rows));
  std::vector<std::size_t> todo;
  for (std::size_t j = 0; j < n; ++j) todo.push_back(j);
  while (!todo.empty() && !sys.infeasible()) {
    std::size_t t = pick_variable(sys, todo);
    sys.eliminate(todo[t]);
    todo.erase(todo.begin() + static_cast<std::ptrdiff_t>(t));
  }
  if (sys.infeasible()) return Polyhedron::empty(k);
  std::vector<Halfspace> out;
  for (const auto &r : sys.rows()) {
    Vec a(r.a.begin() + static_cast<std::ptrdiff_t>(n), r.a.end());
    out.push_back({a, r.b});
    if (r.eq) out.push_back({negated(a), -r.b});
  }
  return Polyhedron(k, std::move(out));
}

std::vector<Vec> quotient_basis(std::size_t n, const std::vector<Vec> &subspace_basis) {
  for (const auto &b : subspace_basis) check_dim(n, b, "subspace generator");
  std::vector<Vec> integral;
  for (const auto &b : subspace_basis) integral.push_back(primitive(b));
  return orthogonal_lattice_basis(n, integral);
}

std::vector<Vec> quotient_basis(const Cone &sigma) {
  return quotient_basis(sigma.ambient_dim(), sigma.poly().direction_basis());
}

Vec apply_rows(const std::vector<Vec> &rows, const Vec &x) {
  Vec y;
  y.reserve(rows.size());
  for (const auto &r : rows) y.push_back(dot(r, x));
  return y;
}

Polyhedron project(const Polyhedron &p, const Cone &sigma) {
  if (p.ambient_dim() != sigma.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "projection by a cone of another dimension");
  return project_linear(p, quotient_basis(sigma));
}

Polyhedron project(const Polyhedron &p, const std::vector<Vec> &subspace_basis) {
  return project_linear(p, quotient_basis(p.ambient_dim(), subspace_basis));
}

// ---- faces -----------------------------------------------------------------

std::vector<Polyhedron> facet_polyhedra(const Polyhedron &p) {
  std::vector<Polyhedron> out;
  for (auto i : p.facial().facets) out.push_back(with_equation(p, p.ineqs()[i]));
  return out;
}

Polyhedron smallest_face(const Polyhedron &p, const Vec &x) {
  if (!p.contains(x)) throw Error(ErrorKind::PreconditionFailed, "point not in polyhedron");
  std::vector<Halfspace> rows = p.ineqs();
  for (const auto &h : p.ineqs())
    if (dot(h.normal, x) == h.offset) rows.push_back({negated(h.normal), -h.offset});
  return Polyhedron(p.ambient_dim(), std::move(rows));
}

bool is_face(const Polyhedron &f, const Polyhedron &p) {
  if (f.is_empty() || !p.contains(f)) return false;
  return smallest_face(p, f.facial().relint_point).key() == f.key();
}

std::vector<Polyhedron> faces(const Polyhedron &p) {
  if (p.is_empty()) return {};
  const auto &rows = p.ineqs();
  auto tight_set = [&](const Polyhedron &f) {
    const Vec &x = f.facial().relint_point;
    std::string t(rows.size(), '0');
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (dot(rows[i].normal, x) == rows[i].offset) t[i] = '1';
    return t;
  };
  auto face_of = [&](const std::string &t) {
    std::vector<Halfspace> r = rows;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (t[i] == '1') r.push_back({negated(rows[i].normal), -rows[i].offset});
    return Polyhedron(p.ambient_dim(), std::move(r));
  };
  std::map<std::string, Polyhedron> seen;
  std::vector<std::string> stack{tight_set(p)};
  seen.emplace(stack.back(), p);
  while (!stack.empty()) {
    std::string t = stack.back();
    stack.pop_back();
    const Polyhedron f = seen.at(t);
    for (auto i : f.facial().facets) {
      Polyhedron g = with_equation(f, f.ineqs()[i]);
      std::string tg = tight_set(g);
      if (seen.count(tg)) continue;
      seen.emplace(tg, face_of(tg));
      stack.push_back(tg);
    }
  }
  std::vector<std::pair<std::string, Polyhedron>> all(seen.begin(), seen.end());
  std::stable_sort(all.begin(), all.end(), [](const auto &a, const auto &b) {
    return a.second.dimension() < b.second.dimension();
  });
  std::vector<Polyhedron> out;
  for (auto &e : all) out.push_back(std::move(e.second));
  return out;
}

// ---- intervals and families ------------------------------------------------

bool Interval::contains(const Scalar &t) const {
  if (empty) return false;
  if (lo && t < *lo) return false;
  if (hi && t > *hi) return false;
  return true;
}

std::string Interval::str() const {
  if (empty) return "{}";
  return "[" + (lo ? to_string(*lo) : std::string("-inf")) + ", " +
         (hi ? to_string(*hi) : std::string("inf")) + "]";
}

Polyhedron AffineFamily::fiber(const Scalar &t) const {
  std::vector<Halfspace> out;
  for (const auto &r : rows) {
    check_dim(ambient_dim, r.normal, "family row");
    out.push_back({r.normal, r.b0 + r.b1 * t});
  }
  return Polyhedron(ambient_dim, std::move(out));
}

Polyhedron AffineFamily::graph() const {
  const std::size_t n = ambient_dim;
  std::vector<Halfspace> out;
  for (const auto &r : rows) {
    check_dim(n, r.normal, "family row");
    Vec a{-r.b1};
    a.insert(a.end(), r.normal.begin(), r.normal.end());
    out.push_back({std::move(a), r.b0});
  }
  out.push_back({unit_vec(n + 1, 0), t_hi});
  out.push_back({negated(unit_vec(n + 1, 0)), -t_lo});
  return Polyhedron(n + 1, std::move(out));
}

Interval parameter_set(const Polyhedron &joint, std::size_t param) {
  if (param >= joint.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "parameter index out of range");
  Polyhedron line = project_linear(joint, {unit_vec(joint.ambient_dim(), param)});
  Interval iv;
  iv.empty = false;
  for (const auto &h : line.ineqs()) {
    if (is_zero(h.normal)) return Interval::none();
    if (sgn(h.normal[0]) > 0) {
      Scalar b = h.offset / h.normal[0];
      if (!iv.hi || b < *iv.hi) iv.hi = b;
    } else {
      Scalar b = h.offset / h.normal[0];
      if (!iv.lo || b > *iv.lo) iv.lo = b;
    }
  }
  if (iv.lo && iv.hi && *iv.lo > *iv.hi) return Interval::none();
  return iv;
}

Interval family_nonempty_set(const AffineFamily &f) {
  if (f.t_lo > f.t_hi) return Interval::none();
  return parameter_set(f.graph(), 0);
}

// ---- coverage --------------------------------------------------------------

namespace {

// Closed rows plus strict rows (<a, x> < b); nonempty iff the max-slack LP on
// the strict rows is positive.
struct Region {
  std::vector<Halfspace> closed;
  std::vector<Halfspace> strict;
};

std::optional<Vec> region_point(std::size_t n, const Region &r) {
  Lp lp;
  lp.num_vars = n + 1;
  for (const auto &h : r.closed) {
    Vec a = h.normal;
    a.emplace_back(0);
    lp.ineqs.push_back({std::move(a), h.offset});
  }
  for (const auto &h : r.strict) {
    Vec a = h.normal;
    a.emplace_back(1);
    lp.ineqs.push_back({std::move(a), h.offset});
  }
  lp.ineqs.push_back({unit_vec(n + 1, n), Scalar(1)});
  lp.maximize = unit_vec(n + 1, n);
  auto res = lp_solve(lp);
  if (res.status != LpStatus::Feasible) return std::nullopt;
  if (!r.strict.empty() && sgn(*res.value) <= 0) return std::nullopt;
  return Vec(res.point.begin(), res.point.begin() + static_cast<std::ptrdiff_t>(n));
}

// q can be dropped from the cover of a relatively open region of dimension d
// when cl(region) ∩ q has dimension below d: the rest of the region stays dense.
bool meets_fully(std::size_t n, const Region &r, const Polyhedron &q, int d) {
  std::vector<Halfspace> rows = r.closed;
  rows.insert(rows.end(), r.strict.begin(), r.strict.end());
  rows.insert(rows.end(), q.ineqs().begin(), q.ineqs().end());
  return Polyhedron(n, std::move(rows)).dimension() == d;
}

// A point of the relatively open region avoiding every q in `thin`, each of
// which meets cl(region) in lower dimension. Walks from a relative interior
// point along moment-curve directions of the region's direction space.
std::optional<Vec> escape_point(std::size_t n, const Region &r, const std::vector<const Polyhedron *> &thin) {
  std::vector<Halfspace> rows = r.closed;
  rows.insert(rows.end(), r.strict.begin(), r.strict.end());
  Polyhedron cl(n, std::move(rows));
  if (cl.is_empty()) return std::nullopt;
  const Vec x0 = cl.facial().relint_point;
  auto outside = [&](const Vec &x) {
    return std::none_of(thin.begin(), thin.end(), [&](const Polyhedron *q) { return q->contains(x); });
  };
  if (outside(x0)) return x0;
  const std::vector<Vec> basis = cl.direction_basis();
  if (basis.empty()) return std::nullopt;
  const std::size_t tries = (basis.size() + 1) * (thin.size() + 1) + 1;
  for (std::size_t k = 1; k <= tries; ++k) {
    Vec u = zero_vec(n);
    Scalar pw = 1;
    for (const auto &b : basis) {
      u = add(u, scaled(b, pw));
      pw *= static_cast<long>(k);
    }
    // admissible steps s in (0, smax) keep x0 + s u inside the region
    std::optional<Scalar> smax;
    for (const auto &h : cl.ineqs()) {
      Scalar au = dot(h.normal, u);
      if (sgn(au) <= 0) continue;
      Scalar lim = (h.offset - dot(h.normal, x0)) / au;
      if (!smax || lim < *smax) smax = lim;
    }
    const Scalar cap = smax ? *smax : Scalar(1);
    std::set<Scalar> cuts{Scalar(0), cap};
    for (const Polyhedron *q : thin)
      for (const auto &h : q->ineqs()) {
        Scalar au = dot(h.normal, u);
        if (is_zero(au)) continue;
        Scalar s = (h.offset - dot(h.normal, x0)) / au;
        if (sgn(s) > 0 && s < cap) cuts.insert(s);
      }
    for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
      Scalar mid = (*it + *std::next(it)) / 2;
      Vec x = add(x0, scaled(u, mid));
      if (outside(x)) return x;
    }
  }
  throw Error(ErrorKind::InternalCheck, "no escape direction found for a dense region");
}

std::optional<Vec> uncovered_rec(std::size_t n, Region region, const std::vector<Polyhedron> &qs,
                                 std::size_t k, int d, std::vector<const Polyhedron *> thin) {
  while (k < qs.size() && !meets_fully(n, region, qs[k], d)) thin.push_back(&qs[k++]);
  if (k == qs.size()) return escape_point(n, region, thin);
  const auto &rows = qs[k].ineqs();
  // p \ q = disjoint union over j of {row j violated, rows < j satisfied}
  for (std::size_t j = 0; j < rows.size(); ++j) {
    Region piece = region;
    for (std::size_t i = 0; i < j; ++i) piece.closed.push_back(rows[i]);
    piece.strict.push_back({negated(rows[j].normal), -rows[j].offset});
    if (!region_point(n, piece)) continue;
    if (auto x = uncovered_rec(n, std::move(piece), qs, k + 1, d, thin)) return x;
  }
  return std::nullopt;
}

std::optional<Vec> outside_interiors_rec(std::size_t n, const std::vector<Halfspace> &region,
                                         const std::vector<Polyhedron> &qs, std::size_t k) {
  auto feasible_point = [&](const std::vector<Halfspace> &rows) -> std::optional<Vec> {
    auto res = lp_solve(lp_over(n, rows));
    if (!res.feasible()) return std::nullopt;
    return res.point;
  };
  // skip q whose interior misses the region
  while (k < qs.size() && !region_point(n, Region{region, qs[k].ineqs()})) ++k;
  if (k == qs.size()) return feasible_point(region);
  // complement of int(q) is the union of the closed halfspaces <a, x> >= b
  for (const auto &h : qs[k].ineqs()) {
    std::vector<Halfspace> piece = region;
    piece.push_back({negated(h.normal), -h.offset});
    if (!feasible_point(piece)) continue;
    if (auto x = outside_interiors_rec(n, piece, qs, k + 1)) return x;
  }
  return std::nullopt;
}

} // namespace

std::optional<Vec> strict_point(std::size_t n, const std::vector<Halfspace> &closed,
                                const std::vector<Halfspace> &strict) {
  for (const auto &h : closed) check_dim(n, h.normal, "row");
  for (const auto &h : strict) check_dim(n, h.normal, "row");
  return region_point(n, Region{closed, strict});
}

std::optional<Vec> uncovered_point(const Polyhedron &p, const std::vector<Polyhedron> &qs) {
  for (const auto &q : qs)
    if (q.ambient_dim() != p.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "cover across dimensions");
  if (p.is_empty()) return std::nullopt;
  std::vector<Polyhedron> cover;
  for (const auto &q : qs) cover.push_back(q.minimized());
  return uncovered_rec(p.ambient_dim(), Region{p.ineqs(), {}}, cover, 0, p.dimension(), {});
}

std::optional<Vec> uncovered_by_interiors(const Polyhedron &p, const std::vector<Polyhedron> &qs) {
  for (const auto &q : qs)
    if (q.ambient_dim() != p.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "cover across dimensions");
  if (p.is_empty()) return std::nullopt;
  std::vector<Polyhedron> cover;
  for (const auto &q : qs) cover.push_back(q.minimized());
  return outside_interiors_rec(p.ambient_dim(), p.ineqs(), cover, 0);
}

} // namespace troplift
