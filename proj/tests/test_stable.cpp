#include "doctest.h"
#include "support.hpp"

#include "troplift/stable.hpp"

using namespace troplift;
using testsupport::Rng;

namespace {

TropicalPolynomial poly(std::size_t n, std::vector<std::pair<Vec, Scalar>> terms) {
  TropicalPolynomial f{n, {}};
  for (auto &[e, v] : terms) f.terms.push_back({e, v});
  return f;
}

Polyhedron ray_from(const Vec &apex, const Vec &dir) { return Polyhedron::from_generators(apex.size(), {apex}, {dir}); }

WeightedComplex curve() {
  return WeightedComplex::make(
      3, 1, {ray_from({0, 0, 0}, {1, 0, 0}), ray_from({0, 0, 0}, {0, 1, 0}), ray_from({0, 0, 0}, {-2, -3, 0})},
      {2, 3, 1});
}

WeightedComplex plane13() {
  return WeightedComplex::make(3, 2, {Polyhedron::subspace(3, {{1, 0, 0}, {0, 0, 1}})}, {1});
}

WeightedComplex line_xy1() { return tropicalize_hypersurface(poly(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{0, 0}, 0}})); }
WeightedComplex line_txy1() { return tropicalize_hypersurface(poly(2, {{{1, 0}, 1}, {{0, 1}, 0}, {{0, 0}, 0}})); }

StableResult single(const Vec &x, long m) {
  StableResult r;
  r.points[x] = m;
  return r;
}

// The first `count` admissible moment-curve vectors.
std::vector<Displacement> admissible_vectors(const WeightedComplex &a, const WeightedComplex &b, std::size_t count) {
  std::vector<Displacement> out;
  for (std::size_t k = 1; out.size() < count; ++k)
    if (auto d = certify(a, b, moment_vector(a.ambient_dim, k))) out.push_back(*d);
  return out;
}

} // namespace

TEST_CASE("transverse multiplicities") {
  CHECK(transverse_multiplicity(Polyhedron::subspace(3, {{1, 0, 0}, {0, 0, 1}}), 1,
                                ray_from({0, -1, 0}, {0, 1, 0}), 3) == 3);
  CHECK(transverse_multiplicity(Polyhedron::subspace(2, {{1, 1}}), 1, Polyhedron::subspace(2, {{1, -1}}), 1) == 2);
  CHECK(transverse_multiplicity(Polyhedron::subspace(2, {{1, 0}}), 2, Polyhedron::subspace(2, {{0, 1}}), 3) == 6);
  // meeting at the apex of the ray is not transverse
  CHECK_THROWS_AS(transverse_multiplicity(Polyhedron::subspace(3, {{1, 0, 0}, {0, 0, 1}}), 1,
                                          ray_from({0, 0, 0}, {0, 1, 0}), 3),
                  Error);
  CHECK_THROWS_AS(transverse_multiplicity(Polyhedron::subspace(2, {{1, 0}}), 1, Polyhedron::subspace(2, {{1, 0}}), 1),
                  Error);
  CHECK_THROWS_AS(transverse_multiplicity(Polyhedron::subspace(2, {{1, 0}}), 1, Polyhedron::universe(2), 1), Error);
}

TEST_CASE("stable intersection of the curve and the plane") {
  StableResult r = stable_intersect(curve(), plane13());
  CHECK(r == single({0, 0, 0}, 3));
  Displacement d = pick_generic_vector(curve(), plane13());
  CHECK(d.candidate == 1);
  CHECK(d.v == Vec{1, 1, 1});
  for (const auto &v : admissible_vectors(curve(), plane13(), 5)) CHECK(stable_intersect(curve(), plane13(), v) == r);
}

TEST_CASE("stable intersection of the intro lines") {
  CHECK(stable_intersect(line_xy1(), line_txy1()) == single({0, 0}, 1));
  CHECK(stable_intersect(line_xy1(), line_xy1()) == single({0, 0}, 1));
}

TEST_CASE("generic vector selection") {
  WeightedComplex empty = WeightedComplex::make(2, 1, {}, {});
  Displacement d = pick_generic_vector(empty, line_xy1());
  CHECK(d.candidate == 1);
  CHECK(stable_intersect(empty, line_xy1()).points.empty());

  // a line and a ray sharing the direction (1,1) of the first candidate
  WeightedComplex a = WeightedComplex::make(2, 1, {Polyhedron::subspace(2, {{1, 1}})}, {1});
  WeightedComplex b = WeightedComplex::make(2, 1, {ray_from({0, 0}, {1, 1})}, {1});
  CHECK_FALSE(check_admissible(a, b, moment_vector(2, 1)));
  Displacement g = pick_generic_vector(a, b);
  CHECK(g.candidate > 1);
  CHECK(check_admissible(a, b, g.v));
  CHECK(stable_intersect(a, b).points.empty());
  CHECK_THROWS_AS(stable_intersect(a, b, Displacement{moment_vector(2, 1), 0, {}}), Error);
}

TEST_CASE("dimension errors") {
  CHECK_THROWS_AS(stable_intersect(curve(), curve()), Error);
  CHECK_THROWS_AS(stable_intersect(curve(), line_xy1()), Error);
  CHECK_THROWS_AS(stable_intersect_multi({curve()}), Error);
  CHECK_THROWS_AS(stable_intersect_multi({curve(), curve(), plane13()}), Error);
}

TEST_CASE("multi-way stable intersection") {
  CHECK(stable_intersect_multi({curve(), plane13()}) == stable_intersect(curve(), plane13()));
  auto plane = tropicalize_hypersurface(
      poly(3, {{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{0, 0, 1}, 0}, {{0, 0, 0}, 0}}));
  StableResult three = stable_intersect_multi({plane, plane, plane});
  CHECK(three.total() == 1);
  StableResult doubled = stable_intersect_multi({plane.scaled_weights(2), plane, plane});
  REQUIRE(doubled.points.size() == three.points.size());
  for (const auto &[x, m] : three.points) CHECK(doubled.points.at(x) == 2 * m);
}

TEST_CASE("property: stable intersections do not depend on the displacement") {
  Rng rng(testsupport::kSeed);
  for (int trial = 0; trial < 8; ++trial) {
    WeightedComplex a = tropicalize_hypersurface(testsupport::random_tropical_poly(rng, 2, 5));
    WeightedComplex b = tropicalize_hypersurface(testsupport::random_tropical_poly(rng, 2, 5));
    StableResult ref = stable_intersect(a, b);
    for (const auto &v : admissible_vectors(a, b, 5)) CHECK(stable_intersect(a, b, v) == ref);
    for (const auto &[x, m] : ref.points) {
      CHECK(m > 0);
      CHECK(a.support_contains(x));
      CHECK(b.support_contains(x));
    }
  }
}

TEST_CASE("property: Bernstein count equals the mixed area") {
  Rng rng(testsupport::kSeed + 1);
  for (int trial = 0; trial < 10; ++trial) {
    TropicalPolynomial f = testsupport::random_tropical_poly(rng, 2, 5);
    TropicalPolynomial g = testsupport::random_tropical_poly(rng, 2, 5);
    StableResult r = stable_intersect(tropicalize_hypersurface(f), tropicalize_hypersurface(g));
    CHECK(Scalar(r.total()) == testsupport::mixed_area(f, g));
  }
}

TEST_CASE("property: displaced intersections are affine in eps and converge") {
  Rng rng(testsupport::kSeed + 2);
  for (int trial = 0; trial < 8; ++trial) {
    WeightedComplex a = tropicalize_hypersurface(testsupport::random_tropical_poly(rng, 2, 5));
    WeightedComplex b = tropicalize_hypersurface(testsupport::random_tropical_poly(rng, 2, 5));
    Displacement d = pick_generic_vector(a, b);
    for (const auto &c : stable_contributions(a, b, d.v)) {
      Vec x0(2), x1(2);
      for (std::size_t k = 0; k < 2; ++k) {
        REQUIRE(c.point[k].is_polynomial());
        x0[k] = c.point[k].num().coeff(0);
        x1[k] = c.point[k].num().coeff(1);
      }
      CHECK(x0 == c.limit);
      CHECK(a.facets[c.facet_a].contains(c.limit));
      CHECK(b.facets[c.facet_b].contains(c.limit));
      for (long e : {1000000L, 1000000000L}) {
        Scalar eps(1, e);
        Vec x = add(x0, scaled(x1, eps));
        CHECK(b.facets[c.facet_b].contains_relint(x));
        CHECK(a.facets[c.facet_a].contains_relint(sub(x, scaled(d.v, eps))));
      }
    }
  }
}

TEST_CASE("property: transverse supports need no displacement") {
  Rng rng(testsupport::kSeed + 3);
  int transverse_cases = 0;
  for (int trial = 0; trial < 30 && transverse_cases < 6; ++trial) {
    WeightedComplex a = tropicalize_hypersurface(testsupport::random_tropical_poly(rng, 2, 4));
    WeightedComplex b = tropicalize_hypersurface(testsupport::random_tropical_poly(rng, 2, 4));
    // transverse when every facet pair meets, if at all, in one relative-interior point
    StableResult direct;
    bool transverse = true;
    for (std::size_t i = 0; i < a.facets.size() && transverse; ++i)
      for (std::size_t j = 0; j < b.facets.size() && transverse; ++j) {
        Polyhedron x = intersect(a.facets[i], b.facets[j]);
        if (x.is_empty()) continue;
        if (x.dimension() != 0) {
          transverse = false;
          break;
        }
        Vec p = x.facial().relint_point;
        if (!a.facets[i].contains_relint(p) || !b.facets[j].contains_relint(p)) {
          transverse = false;
          break;
        }
        direct.points[p] += transverse_multiplicity(a.facets[i], a.weights[i], b.facets[j], b.weights[j]);
      }
    if (!transverse) continue;
    ++transverse_cases;
    CHECK(stable_intersect(a, b) == direct);
  }
  CHECK(transverse_cases >= 3);
}

TEST_CASE("property: multi-way agrees with pairwise") {
  Rng rng(testsupport::kSeed + 4);
  for (int trial = 0; trial < 10; ++trial) {
    WeightedComplex a = tropicalize_hypersurface(testsupport::random_tropical_poly(rng, 2, 4));
    WeightedComplex b = tropicalize_hypersurface(testsupport::random_tropical_poly(rng, 2, 4));
    CHECK(stable_intersect_multi({a, b}) == stable_intersect(a, b));
  }
}
