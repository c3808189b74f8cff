#include "doctest.h"
#include "support.hpp"

#include "troplift/linalg.hpp"
#include "troplift/polyhedron.hpp"

#include <set>

using namespace troplift;
using testsupport::Rng;

namespace {

Polyhedron box(std::vector<std::pair<long, long>> bounds) {
  const std::size_t n = bounds.size();
  std::vector<Halfspace> rows;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back({unit_vec(n, i), Scalar(bounds[i].second)});
    rows.push_back({negated(unit_vec(n, i)), Scalar(-bounds[i].first)});
  }
  return Polyhedron(n, rows);
}

Polyhedron h(std::size_t n, std::vector<std::pair<Vec, Scalar>> rows) {
  std::vector<Halfspace> hs;
  for (auto &[a, b] : rows) hs.push_back({a, b});
  return Polyhedron(n, hs);
}

std::set<Vec, VecLess> as_set(const std::vector<Vec> &v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("normalization keeps integral primitive normals") {
  Polyhedron p = h(2, {{{Scalar(1, 2), Scalar(1, 3)}, 1}, {{0, 0}, 5}, {{2, 0}, 4}, {{1, 0}, 3}});
  REQUIRE(p.ineqs().size() == 2);
  for (const auto &r : p.ineqs()) CHECK(is_integral(r.normal));
  CHECK(p.contains(Vec{1, 0}));
  CHECK_FALSE(p.contains(Vec{Scalar(5, 2), 0}));
  CHECK(Polyhedron::empty(3).is_empty());
  CHECK_THROWS_AS(h(2, {{{1, 0, 0}, 1}}), Error);
}

TEST_CASE("recession cone") {
  Polyhedron p = h(2, {{{-1, 0}, -1}, {{0, -1}, -2}});
  CHECK(recession_cone(p).poly().same_set(h(2, {{{-1, 0}, 0}, {{0, -1}, 0}})));
  CHECK(recession_cone(box({{0, 1}, {0, 1}})).poly().same_set(Polyhedron::point({0, 0})));
  Cone r1 = Cone::from_rays(3, {{1, 0, 0}});
  CHECK(recession_cone(r1.poly()).poly().same_set(r1.poly()));
  CHECK_THROWS_AS(recession_cone(Polyhedron::empty(2)), Error);
}

TEST_CASE("projection") {
  Polyhedron tri = h(2, {{{-1, 0}, 0}, {{1, 0}, 1}, {{0, -1}, 0}, {{-1, 1}, 0}});
  Polyhedron img = project_linear(tri, {{0, 1}});
  CHECK(img.same_set(box({{0, 1}})));

  Cone ray = Cone::from_rays(3, {{-2, -3, 0}});
  CHECK(quotient_basis(Cone::from_rays(3, {{1, 0, 0}})) == std::vector<Vec>{{0, 1, 0}, {0, 0, 1}});
  Polyhedron q = project(ray.poly(), Cone::from_rays(3, {{1, 0, 0}}));
  CHECK(q.same_set(Cone::from_rays(2, {{-3, 0}}).poly()));
  CHECK(q.generators().rays == std::vector<Vec>{{-1, 0}});

  Polyhedron wedge = h(2, {{{-1, -1}, 0}, {{-1, 1}, 0}, {{1, 0}, 1}});
  CHECK(project_linear(wedge, {{0, 1}}).same_set(box({{-1, 1}})));
  CHECK(project_linear(Polyhedron::empty(3), {{1, 0, 0}}).is_empty());
}

TEST_CASE("relative interior points") {
  auto seg = relint_point(box({{0, 1}}));
  CHECK(seg.dim == 1);
  CHECK(seg.point[0] > 0);
  CHECK(seg.point[0] < 1);
  auto pt = relint_point(Polyhedron::point({3, 4}));
  CHECK(pt.dim == 0);
  CHECK(pt.point == Vec{3, 4});
  CHECK_THROWS_AS(relint_point(h(1, {{{1}, 0}, {{-1}, -1}})), Error);

  Polyhedron flat = h(3, {{{0, 0, 1}, 0}, {{0, 0, -1}, 0}, {{-1, 0, 0}, 0}, {{0, -1, 0}, 0}, {{1, 1, 0}, 1}});
  auto f = relint_point(flat);
  CHECK(f.dim == 2);
  CHECK(flat.contains_relint(f.point));
  CHECK(flat.facial().facets.size() == 3);
  CHECK(flat.facial().equalities.size() == 2);
}

TEST_CASE("vertices") {
  CHECK(as_set(vertices(box({{0, 1}, {0, 1}}))) == as_set({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  Polyhedron ray = Polyhedron::from_generators(2, {{1, 2}}, {{1, 0}});
  CHECK(vertices(ray) == std::vector<Vec>{{1, 2}});
  CHECK_THROWS_AS(vertices(Polyhedron::subspace(2, {{1, 1}})), Error);
  CHECK_THROWS_AS(vertices(Polyhedron::empty(2)), Error);
}

TEST_CASE("minkowski sums") {
  Polyhedron sq = box({{0, 1}, {0, 1}});
  CHECK(minkowski_sum(sq, Cone::origin(2)).same_set(sq));
  Cone quad = Cone::from_rays(2, {{1, 0}, {0, 1}});
  CHECK(minkowski_sum(Polyhedron::point({0, 0}), quad).same_set(quad.poly()));
  Polyhedron seg = Polyhedron::from_generators(2, {{0, 0}, {1, 0}}, {});
  Polyhedron strip = h(2, {{{-1, 0}, 0}, {{1, 0}, 1}, {{0, -1}, 0}});
  CHECK(minkowski_sum(seg, Cone::from_rays(2, {{0, 1}})).same_set(strip));
}

TEST_CASE("affine families") {
  AffineFamily f{1, 0, 1, {{{-1}, 0, -1}, {{1}, 1, -1}}};
  CHECK(family_nonempty_set(f) == Interval::closed(0, Scalar(1, 2)));

  // t P for P = {x >= 1}: rows -x <= -t
  AffineFamily g{1, 0, 1, {{{-1}, 0, -1}}};
  CHECK(family_nonempty_set(g) == Interval::closed(0, 1));

  // (P + t e1) ∩ P' with P = {0}, P' = [0,1] x {0}
  AffineFamily k{2, -1, 2,
                 {{{1, 0}, 0, 1}, {{-1, 0}, 0, -1}, {{0, 1}, 0, 0}, {{0, -1}, 0, 0},
                  {{1, 0}, 1, 0}, {{-1, 0}, 0, 0}}};
  CHECK(family_nonempty_set(k) == Interval::closed(0, 1));

  AffineFamily none{1, 0, 1, {{{1}, -5, 0}, {{-1}, 0, 0}}};
  CHECK(family_nonempty_set(none).empty);
}

TEST_CASE("faces and keys") {
  Polyhedron sq = box({{0, 1}, {0, 1}});
  auto fs = faces(sq);
  CHECK(fs.size() == 9);
  CHECK(fs.front().dimension() == 0);
  CHECK(fs.back().dimension() == 2);
  Polyhedron quad = Cone::from_rays(2, {{1, 0}, {0, 1}}).poly();
  CHECK(faces(quad).size() == 4);
  Polyhedron halfplane = h(2, {{{0, -1}, 0}});
  CHECK(faces(halfplane).size() == 2);

  Polyhedron a = h(2, {{{1, 1}, 2}, {{-1, 0}, 0}, {{0, -1}, 0}});
  Polyhedron b = Polyhedron::from_generators(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}}, {});
  CHECK(a.key() == b.key());
  CHECK(a.key() != sq.key());
  Polyhedron l1 = Polyhedron::from_generators(2, {{0, 5}}, {}, {{1, 0}});
  Polyhedron l2 = h(2, {{{0, 1}, 5}, {{0, -1}, -5}});
  CHECK(l1.key() == l2.key());
}

TEST_CASE("coverage") {
  Polyhedron seg = box({{0, 2}});
  CHECK_FALSE(uncovered_point(seg, {box({{0, 1}}), box({{1, 2}})}).has_value());
  auto gap = uncovered_point(seg, {box({{0, 1}}), h(1, {{{1}, 2}, {{-1}, Scalar(-3, 2)}})});
  CHECK(gap.has_value());
  auto x = uncovered_point(seg, {box({{0, 1}})});
  REQUIRE(x.has_value());
  CHECK((*x)[0] > 1);
  CHECK(uncovered_by_interiors(box({{0, 1}}), {box({{-1, 2}})}) == std::nullopt);
  CHECK(uncovered_by_interiors(box({{0, 1}}), {box({{0, 2}})}).has_value());
  CHECK(uncovered_by_interiors(box({{0, 2}}), {box({{-1, 1}}), box({{1, 3}})}).has_value());
}

TEST_CASE("property: H to V to H round trip") {
  Rng rng;
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    Polyhedron p = trial % 2 ? testsupport::random_polytope(rng, n, static_cast<int>(rng.uniform(0, 4)))
                             : testsupport::random_polyhedron(rng, n, static_cast<int>(rng.uniform(1, 5)));
    const Generators &g = p.generators();
    Polyhedron back = Polyhedron::from_generators(n, g.points, g.rays, g.lineality);
    CHECK(back.contains(p));
    CHECK(p.contains(back));
    CHECK(back.key() == p.key());
  }
}

TEST_CASE("property: 2D vertices match pairwise intersection oracle") {
  Rng rng(testsupport::kSeed + 10);
  for (int trial = 0; trial < 40; ++trial) {
    Polyhedron p = testsupport::random_polytope(rng, 2, static_cast<int>(rng.uniform(1, 5)));
    CHECK(as_set(vertices(p)) == testsupport::brute_vertices_2d(p));
  }
}

TEST_CASE("property: projections are exact images") {
  Rng rng(testsupport::kSeed + 11);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    Polyhedron p = testsupport::random_polytope(rng, n, static_cast<int>(rng.uniform(1, 4)));
    std::vector<Vec> q{rng.nonzero_vec(n, -2, 2)};
    if (n > 2) q.push_back(rng.nonzero_vec(n, -2, 2));
    Polyhedron img = project_linear(p, q);
    // sampled points of P land in the image
    for (const auto &v : p.generators().points) CHECK(img.contains(apply_rows(q, v)));
    CHECK(img.contains(apply_rows(q, relint_point(p).point)));
    // every vertex of the image lifts
    for (const auto &v : img.generators().points) CHECK(testsupport::in_image(p, q, v));
    // grid points agree with the LP oracle
    for (int k = 0; k < 15; ++k) {
      Vec y = rng.int_vec(q.size(), -8, 8);
      CHECK(img.contains(y) == testsupport::in_image(p, q, y));
    }
  }
}

TEST_CASE("property: shrinking a polyhedron converges into its recession cone") {
  Rng rng(testsupport::kSeed + 12);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    Polyhedron p = testsupport::random_polyhedron(rng, n, static_cast<int>(rng.uniform(1, 4)));
    if (p.is_empty()) continue;
    Cone rho = recession_cone(p);
    Scalar bound = 0;
    for (const auto &v : p.generators().points)
      for (const auto &x : v) bound = std::max(bound, Scalar(abs(x)));
    Polyhedron cube = box(std::vector<std::pair<long, long>>(n, {-1, 1}));
    for (Scalar eps : {Scalar(1), Scalar(1, 4), Scalar(1, 64)}) {
      // eps P ⊆ rho(P) + eps * bound * [-1, 1]^n
      Polyhedron relaxed = Polyhedron::from_generators(
          n, scale(cube, eps * (bound + 1)).generators().points, rho.rays(), rho.poly().generators().lineality);
      CHECK(relaxed.contains(scale(p, eps)));
    }
  }
}

TEST_CASE("property: family nonempty sets are closed intervals") {
  Rng rng(testsupport::kSeed + 13);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    AffineFamily f;
    f.ambient_dim = n;
    f.t_lo = rng.uniform(-3, 0);
    f.t_hi = rng.uniform(0, 3);
    int rows = static_cast<int>(rng.uniform(1, 5));
    for (int i = 0; i < rows; ++i)
      f.rows.push_back({rng.nonzero_vec(n, -2, 2), Scalar(rng.uniform(-3, 3)), Scalar(rng.uniform(-2, 2))});
    Interval iv = family_nonempty_set(f);
    if (!iv.empty) {
      REQUIRE(iv.lo.has_value());
      REQUIRE(iv.hi.has_value());
      CHECK(*iv.lo <= *iv.hi);
      CHECK_FALSE(f.fiber(*iv.lo).is_empty());
      CHECK_FALSE(f.fiber(*iv.hi).is_empty());
    }
    for (int k = 0; k <= 12; ++k) {
      Scalar t = f.t_lo + (f.t_hi - f.t_lo) * Scalar(k, 12);
      CHECK(iv.contains(t) == !f.fiber(t).is_empty());
    }
  }
}

TEST_CASE("property: minkowski sums are associative and add recession cones") {
  Rng rng(testsupport::kSeed + 14);
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    Polyhedron p = testsupport::random_polytope(rng, n, 2);
    Cone c1 = Cone::from_rays(n, {rng.nonzero_vec(n, -2, 2)});
    Cone c2 = Cone::from_rays(n, {rng.nonzero_vec(n, -2, 2), rng.nonzero_vec(n, -2, 2)});
    Cone c12 = Cone::from_rays(n, [&] {
      auto r = c1.rays();
      r.insert(r.end(), c2.rays().begin(), c2.rays().end());
      auto l = c2.poly().generators().lineality;
      for (auto &v : l) {
        r.push_back(v);
        r.push_back(negated(v));
      }
      return r;
    }());
    Polyhedron a = minkowski_sum(minkowski_sum(p, c1), c2);
    Polyhedron b = minkowski_sum(p, c12);
    CHECK(a.same_set(b));
    CHECK(recession_cone(a).poly().same_set(c12.poly()));
  }
}
