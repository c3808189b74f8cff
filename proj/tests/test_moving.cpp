#include "doctest.h"
#include "support.hpp"

#include "troplift/moving.hpp"

using namespace troplift;
using testsupport::Rng;

namespace {

TropicalPolynomial poly(std::size_t n, std::vector<std::pair<Vec, Scalar>> terms) {
  TropicalPolynomial f{n, {}};
  for (auto &[e, v] : terms) f.terms.push_back({e, v});
  return f;
}

Polyhedron ray_from(const Vec &apex, const Vec &dir) { return Polyhedron::from_generators(apex.size(), {apex}, {dir}); }

Polyhedron r1() { return ray_from({0, 0, 0}, {1, 0, 0}); }

CompactifyingDatum curve_plane() {
  WeightedComplex a = WeightedComplex::make(
      3, 1, {ray_from({0, 0, 0}, {1, 0, 0}), ray_from({0, 0, 0}, {0, 1, 0}), ray_from({0, 0, 0}, {-2, -3, 0})},
      {2, 3, 1});
  WeightedComplex b = WeightedComplex::make(3, 2, {Polyhedron::subspace(3, {{1, 0, 0}, {0, 0, 1}})}, {1});
  return {a, b, Component{{r1()}, false}, Fan(3, {Cone(r1())}), PolyCollection{3, {r1()}}};
}

// The transverse point (0, 1) of two tropical lines, with the trivial fan.
CompactifyingDatum bounded_point() {
  WeightedComplex a = tropicalize_hypersurface(poly(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{0, 0}, 0}}));
  WeightedComplex b = tropicalize_hypersurface(poly(2, {{{1, 0}, -1}, {{0, 1}, -2}, {{0, 0}, 0}}));
  Polyhedron p = Polyhedron::point({0, 1});
  return {a, b, Component{{p}, true}, Fan::trivial(2), PolyCollection{2, {p}}};
}

std::string failures(const MovingReport &rep) {
  std::string out;
  for (const auto &f : rep.failures) out += f + "\n";
  return out;
}

void require_verified(const CompactifyingDatum &d, const MovingData &m) {
  MovingReport rep = verify_moving_data(d, m, 4);
  CHECK_MESSAGE(rep.ok(), failures(rep));
  CHECK_FALSE(rep.samples.empty());
  for (const auto &s : rep.samples) {
    CHECK(s.finite);
    CHECK(s.interior);
    CHECK(s.transverse);
    CHECK(s.total == rep.expected_total);
  }
}

bool mentions(const MovingReport &rep, const std::string &word) {
  for (const auto &f : rep.failures)
    if (f.find(word) != std::string::npos) return true;
  return false;
}

} // namespace

TEST_CASE("the curve-plane datum is a compactifying datum") {
  CHECK(validate_datum(curve_plane()));
  CHECK(validate_datum(bounded_point()));
}

TEST_CASE("a collection missing part of C is rejected") {
  CompactifyingDatum d = curve_plane();
  Polyhedron seg = Polyhedron::from_generators(3, {{0, 0, 0}, {1, 0, 0}}, {});
  d.coll = PolyCollection{3, {seg}};
  d.fan = Fan::trivial(3);
  auto v = validate_datum(d);
  REQUIRE_FALSE(v);
  CHECK(v.counterexample->clause == "intersection");
  REQUIRE(v.counterexample->point);
  CHECK(r1().contains(*v.counterexample->point));
  CHECK_FALSE(seg.contains(*v.counterexample->point));
  CHECK_THROWS_AS(find_moving_data(d), Error);
}

TEST_CASE("an incompatible fan is rejected with the offending pair") {
  WeightedComplex a = WeightedComplex::make(3, 1, {Polyhedron::subspace(3, {{1, -1, 0}})}, {1});
  WeightedComplex b = WeightedComplex::make(3, 2, {Polyhedron::subspace(3, {{1, 1, 0}, {0, 0, 1}})}, {1});
  Polyhedron quad = Polyhedron::from_generators(3, {{0, 0, 0}}, {{1, 0, 0}, {0, 1, 0}});
  Polyhedron origin = Polyhedron::point({0, 0, 0});
  CompactifyingDatum d{a, b, Component{{origin}, true}, Fan(3, {Cone(quad)}), PolyCollection{3, {quad}}};
  auto v = validate_datum(d);
  REQUIRE_FALSE(v);
  CHECK(v.counterexample->clause == "compatible");
  REQUIRE(v.counterexample->pair);
  CHECK(d.fan[v.counterexample->pair->first].poly().same_set(quad));
  try {
    find_moving_data(d);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailed);
  }
}

TEST_CASE("moving data for the curve-plane datum") {
  CompactifyingDatum d = curve_plane();
  MovingData m = find_moving_data(d);
  // pieces {0} and R1
  REQUIRE(m.thickened.polys.size() == 2);
  CHECK(m.amounts == std::vector<Scalar>{1, 1});
  CHECK(m.v.v == Vec{1, 1, 1});
  CHECK(moving_breakpoints(d, m.thickened, m.v.v) == std::vector<Scalar>{-1, 1});
  CHECK(m.eps == Scalar(1, 2));
  require_verified(d, m);
  MovingReport rep = verify_moving_data(d, m, 3);
  CHECK(rep.expected_total == 3);

  // r > 0: the ray (-2,-3,0) crosses the plane with index 3
  auto pts = translated_intersection(d, m.thickened, m.v.v, Scalar(1, 4));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].same_set(Polyhedron::point({Scalar(1, 12), 0, Scalar(1, 4)})));
  // r < 0: the weight-3 ray e2
  pts = translated_intersection(d, m.thickened, m.v.v, Scalar(-1, 4));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].same_set(Polyhedron::point({Scalar(-1, 4), 0, Scalar(-1, 4)})));
}

TEST_CASE("eps beyond a breakpoint is reported") {
  CompactifyingDatum d = curve_plane();
  MovingData m = find_moving_data(d);
  m.eps *= 2;
  MovingReport rep = verify_moving_data(d, m, 3);
  CHECK_FALSE(rep.ok());
  CHECK(mentions(rep, "interior"));
  bool at_breakpoint = false;
  for (const auto &s : rep.samples)
    if (abs(s.r) == 1 && !s.interior) at_breakpoint = true;
  CHECK(at_breakpoint);
}

TEST_CASE("an inadmissible displacement is reported as infinite") {
  CompactifyingDatum d = curve_plane();
  MovingData m = find_moving_data(d);
  m.v = Displacement{{1, 0, 0}, 0, {}};
  MovingReport rep = verify_moving_data(d, m, 3);
  CHECK_FALSE(rep.ok());
  CHECK(mentions(rep, "not finite"));
}

TEST_CASE("bounded component with the trivial fan") {
  CompactifyingDatum d = bounded_point();
  MovingData m = find_moving_data(d);
  REQUIRE(m.thickened.polys.size() == 1);
  CHECK(m.amounts == std::vector<Scalar>{Scalar(1, 2)});
  CHECK(m.thickened.polys[0].is_bounded());
  require_verified(d, m);
  CHECK(verify_moving_data(d, m, 2).expected_total == 1);
}

TEST_CASE("a collection that is already a decomposition is kept") {
  CompactifyingDatum d = curve_plane();
  PolyCollection dec = delta_decompose(d.coll, d.fan);
  d.coll = dec;
  MovingData m = find_moving_data(d);
  REQUIRE(m.thickened.polys.size() == dec.polys.size());
  require_verified(d, m);
}

TEST_CASE("property: moving data construction is deterministic") {
  for (const auto &d : {curve_plane(), bounded_point()})
    CHECK(same_moving_data(find_moving_data(d), find_moving_data(d)));
}

TEST_CASE("property: translated transverse totals match the stable multiplicity") {
  Rng rng(testsupport::kSeed + 7);
  int checked = 0;
  for (int trial = 0; trial < 12 && checked < 6; ++trial) {
    WeightedComplex a = tropicalize_hypersurface(testsupport::random_tropical_poly(rng, 2, 4));
    WeightedComplex b = tropicalize_hypersurface(testsupport::random_tropical_poly(rng, 2, 4));
    StableResult st = stable_intersect(a, b);
    for (const auto &c : intersect_components(a, b)) {
      PolyCollection coll{2, c.cells};
      Fan fan = build_compactifying_fan(coll, true);
      CompactifyingDatum d{a, b, c, fan, coll};
      if (!validate_datum(d)) continue;
      MovingData m = find_moving_data(d);
      MovingReport rep = verify_moving_data(d, m, 3);
      CHECK_MESSAGE(rep.ok(), failures(rep));
      Integer inside = 0;
      for (const auto &[x, mult] : st.points)
        for (const auto &cell : c.cells)
          if (cell.contains(x)) {
            inside += mult;
            break;
          }
      CHECK(rep.expected_total == inside);
      for (const auto &s : rep.samples) CHECK(s.total == inside);
      ++checked;
    }
  }
  CHECK(checked >= 3);
}
