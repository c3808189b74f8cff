#pragma once

#include "troplift/cycles.hpp"
#include "troplift/lp.hpp"
#include "troplift/polyhedron.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace testsupport {

using troplift::Halfspace;
using troplift::Polyhedron;
using troplift::Scalar;
using troplift::Vec;

inline constexpr std::uint64_t kSeed = 0x5eed2026;

struct Rng {
  explicit Rng(std::uint64_t seed = kSeed) : gen(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  bool coin() { return uniform(0, 1) == 1; }
  Vec int_vec(std::size_t n, long lo, long hi) {
    Vec v(n);
    for (auto &x : v) x = uniform(lo, hi);
    return v;
  }
  Vec nonzero_vec(std::size_t n, long lo, long hi) {
    for (;;) {
      Vec v = int_vec(n, lo, hi);
      for (const auto &x : v)
        if (x != 0) return v;
    }
  }
  // Canonical rational num/den with num in [lo, hi], den in [1, max_den].
  Scalar rational(long lo, long hi, long max_den) {
    Scalar q(uniform(lo, hi), uniform(1, max_den));
    q.canonicalize();
    return q;
  }
  std::mt19937_64 gen;
};

// Polytope: box [-b, b]^n cut by random halfspaces that keep the origin.
inline Polyhedron random_polytope(Rng &rng, std::size_t n, int cuts, long b = 3) {
  std::vector<Halfspace> rows;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back({troplift::unit_vec(n, i), Scalar(b)});
    rows.push_back({troplift::negated(troplift::unit_vec(n, i)), Scalar(b)});
  }
  for (int k = 0; k < cuts; ++k) rows.push_back({rng.nonzero_vec(n, -3, 3), Scalar(rng.uniform(1, 4))});
  return Polyhedron(n, rows);
}

// Possibly unbounded polyhedron: random halfspaces through points near a
// fixed center, so it is nonempty.
inline Polyhedron random_polyhedron(Rng &rng, std::size_t n, int rows_count) {
  std::vector<Halfspace> rows;
  for (int k = 0; k < rows_count; ++k) rows.push_back({rng.nonzero_vec(n, -2, 2), Scalar(rng.uniform(0, 3))});
  return Polyhedron(n, rows);
}

// Collection of `count` nonempty random polyhedra.
inline troplift::PolyCollection random_coll(Rng &rng, std::size_t n, int count) {
  troplift::PolyCollection c{n, {}};
  while (static_cast<int>(c.polys.size()) < count) {
    Polyhedron p = random_polyhedron(rng, n, static_cast<int>(rng.uniform(1, 3)));
    if (!p.is_empty()) c.polys.push_back(p);
  }
  return c;
}

inline troplift::PolyCollection join(troplift::PolyCollection a, const troplift::PolyCollection &b) {
  for (const auto &p : b.polys) a.polys.push_back(p);
  return a;
}

// Cofactor-expansion determinant.
inline Scalar det(const std::vector<Vec> &m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Scalar total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<Vec> minor;
    for (std::size_t i = 1; i < n; ++i) {
      Vec r;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) r.push_back(m[i][k]);
      minor.push_back(r);
    }
    Scalar c = m[0][j] * det(minor);
    total += (j % 2 == 0) ? c : Scalar(-c);
  }
  return total;
}

// Vertices of a 2D polyhedron by intersecting every pair of rows.
inline std::set<Vec, troplift::VecLess> brute_vertices_2d(const Polyhedron &p) {
  std::set<Vec, troplift::VecLess> out;
  const auto &r = p.ineqs();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      Scalar d = r[i].normal[0] * r[j].normal[1] - r[i].normal[1] * r[j].normal[0];
      if (d == 0) continue;
      Vec x{(r[i].offset * r[j].normal[1] - r[i].normal[1] * r[j].offset) / d,
            (r[i].normal[0] * r[j].offset - r[i].offset * r[j].normal[0]) / d};
      if (p.contains(x)) out.insert(x);
    }
  return out;
}

// y in image of p under x -> Qx, decided by an LP in x.
inline bool in_image(const Polyhedron &p, const std::vector<Vec> &q, const Vec &y) {
  troplift::LinearProgram<Scalar> lp;
  lp.num_vars = p.ambient_dim();
  for (const auto &h : p.ineqs()) lp.ineqs.push_back({h.normal, h.offset});
  for (std::size_t k = 0; k < q.size(); ++k) lp.eqs.push_back({q[k], y[k]});
  return troplift::lp_solve(lp).feasible();
}

// Random tropical polynomial with distinct exponents in [0, max_exp]^n.
inline troplift::TropicalPolynomial random_tropical_poly(Rng &rng, std::size_t n, int max_terms, long max_exp = 2) {
  troplift::TropicalPolynomial f{n, {}};
  int count = static_cast<int>(rng.uniform(2, max_terms));
  std::set<Vec, troplift::VecLess> used;
  while (static_cast<int>(f.terms.size()) < count) {
    Vec e = rng.int_vec(n, 0, max_exp);
    if (!used.insert(e).second) continue;
    f.terms.push_back({e, rng.rational(-4, 4, 2)});
  }
  return f;
}

// 2D convex hull, counterclockwise, by monotone chain.
inline std::vector<Vec> hull_2d(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), troplift::VecLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const Vec &o, const Vec &a, const Vec &b) -> Scalar {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vec> h;
  for (int pass = 0; pass < 2; ++pass) {
    std::size_t start = h.size();
    for (const auto &p : pts) {
      while (h.size() >= start + 2 && cross(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
      h.push_back(p);
    }
    h.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  return h;
}

// Shoelace area of conv(pts).
inline Scalar hull_area(const std::vector<Vec> &pts) {
  std::vector<Vec> h = hull_2d(pts);
  Scalar twice = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Vec &a = h[i];
    const Vec &b = h[(i + 1) % h.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return abs(twice) / 2;
}

inline std::vector<Vec> exponents(const troplift::TropicalPolynomial &f) {
  std::vector<Vec> out;
  for (const auto &t : f.terms) out.push_back(t.exponent);
  return out;
}

// Mixed area of the Newton polygons: Area(P + Q) - Area(P) - Area(Q).
inline Scalar mixed_area(const troplift::TropicalPolynomial &f, const troplift::TropicalPolynomial &g) {
  std::vector<Vec> sum;
  for (const auto &a : exponents(f))
    for (const auto &b : exponents(g)) sum.push_back(troplift::add(a, b));
  return hull_area(sum) - hull_area(exponents(f)) - hull_area(exponents(g));
}

} // namespace testsupport
