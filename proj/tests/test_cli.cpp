#include "doctest.h"

#include "troplift/cli.hpp"
#include "troplift/json_io.hpp"
#include "troplift/svg.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace troplift;
using json::Json;

namespace {

const std::string kData = TROPLIFT_TEST_DATA;

std::string data(const std::string &name) { return kData + "/" + name + ".json"; }

Json load(const std::string &path) {
  std::ifstream in(path);
  return Json::parse(in);
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "troplift");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json cli_json(std::vector<std::string> args) {
  Run r = cli(std::move(args));
  INFO(r.err);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::string temp_file(const std::string &name, const std::string &content) {
  auto p = std::filesystem::temp_directory_path() / ("troplift_test_" + name);
  std::ofstream(p) << content;
  return p.string();
}

} // namespace

TEST_CASE("stable-intersect on the curve and the plane") {
  Json j = cli_json({"stable-intersect", "--cycle", data("curve3d"), "--cycle", data("plane13")});
  CHECK(j == Json::parse(R"({"points": [{"at": ["0","0","0"], "mult": 3}]})"));
  // golden: same as the direct call
  auto a = json::read_complex(load(data("curve3d")));
  auto b = json::read_complex(load(data("plane13")));
  CHECK(j == json::write_stable(stable_intersect(a, b)));
  CHECK(cli_json({"stable-intersect", "--cycle", data("curve3d"), "--cycle", data("plane13"), "--vector", "1,2,4"}) ==
        j);
}

TEST_CASE("check reports the compactifying fan") {
  CHECK(cli_json({"check", "--fan", data("fan_r1"), "--complex", data("coll_r1"), "--compactifying"}) ==
        Json{{"holds", true}});
  CHECK(cli_json({"check", "--fan", data("fan_r1"), "--coll", data("coll_r1"), "--compatible"}) ==
        Json{{"holds", true}});
  CHECK(cli_json({"check", "--fan", data("fan_r1"), "--smooth"}) == Json{{"holds", true}});
  // the trivial fan does not compactify the ray
  std::string trivial = temp_file("trivial_fan.json", json::write_fan(Fan::trivial(3)).dump());
  Json j = cli_json({"check", "--fan", trivial, "--coll", data("coll_r1"), "--compactifying"});
  CHECK(j["holds"] == false);
  CHECK(j["counterexample"]["poly"] == 0);
}

TEST_CASE("newton-polygon output") {
  CHECK(cli_json({"newton-polygon", "--poly", data("q_newton")}) ==
        Json::parse(R"({"roots": [{"val":"0","mult":2},{"val":"2","mult":1}]})"));
}

TEST_CASE("tropicalize, components and closure match the library") {
  auto f = json::read_polynomial(load(data("curve_poly")));
  CHECK(cli_json({"tropicalize", "--poly", data("curve_poly")}) == json::write_complex(tropicalize_hypersurface(f)));
  Json emb = cli_json({"tropicalize", "--poly", data("curve_poly"), "--embed", "3"});
  WeightedComplex c3 = json::read_complex(emb);
  CHECK(stable_intersect(c3, json::read_complex(load(data("plane13")))).total() == 3);

  auto l1 = json::read_complex(cli_json({"tropicalize", "--poly", data("line_xy1")}));
  auto l2 = json::read_complex(cli_json({"tropicalize", "--poly", data("line_txy1")}));
  std::string p1 = temp_file("l1.json", json::write_complex(l1).dump());
  std::string p2 = temp_file("l2.json", json::write_complex(l2).dump());
  Json comps = cli_json({"components", "--cycle", p1, "--cycle", p2});
  CHECK(comps == json::write_components(intersect_components(l1, l2)));
  REQUIRE(comps["components"].size() == 1);
  CHECK(comps["components"][0]["bounded"] == false);
  CHECK(cli_json({"stable-intersect", "--cycle", p1, "--cycle", p2}) ==
        Json::parse(R"({"points": [{"at": ["0","0"], "mult": 1}]})"));

  auto coll = json::read_collection(load(data("coll_r1")));
  auto fan = json::read_fan(load(data("fan_r1")));
  Json cl = cli_json({"closure", "--coll", data("coll_r1"), "--fan", data("fan_r1")});
  CHECK(cl == json::write_strata(extended_closure(coll, fan)));
  CHECK(cl["strata"].size() == 2);
  CHECK(cli_json({"decompose", "--coll", data("coll_r1"), "--fan", data("fan_r1")}) ==
        json::write_collection(delta_decompose(coll, fan)));
  CHECK(cli_json({"thicken", "--coll", data("coll_r1"), "--eps", "1/2"}) ==
        json::write_collection(thicken(coll, Scalar(1, 2))));
  CHECK(cli_json({"compactify", "--coll", data("coll_r1"), "--minimal"}) ==
        json::write_fan(build_compactifying_fan(coll, true)));
}

TEST_CASE("stable-intersect-multi and moving-data") {
  Json m = cli_json({"stable-intersect-multi", "--cycle", data("curve3d"), "--cycle", data("plane13")});
  CHECK(m["points"][0]["mult"] == 3);
  Json mv = cli_json({"moving-data", "--cycle", data("curve3d"), "--cycle", data("plane13"), "--fan", data("fan_r1"),
                      "--coll", data("coll_r1")});
  CHECK(mv["report"]["ok"] == true);
  CHECK(mv["report"]["expected_total"] == 3);
  CHECK(mv["eps"] == "1/2");
  CHECK(mv["v"] == Json::parse(R"(["1","1","1"])"));
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"no-such-command"}).code == 1);
  CHECK(cli({"stable-intersect", "--cycle", data("curve3d")}).code == 1);
  CHECK(cli({"stable-intersect", "--cycle", "/nonexistent.json", "--cycle", data("plane13")}).code == 1);
  std::string broken = temp_file("broken.json", "{\"dim\": 3, \"puredim\": 1, \"cells\": [");
  CHECK(cli({"stable-intersect", "--cycle", broken, "--cycle", data("plane13")}).code == 1);
  std::string badschema = temp_file("badschema.json", R"({"dim": 3, "cells": []})");
  CHECK(cli({"stable-intersect", "--cycle", badschema, "--cycle", data("plane13")}).code == 1);
  CHECK(cli({"thicken", "--coll", temp_file("bc.json", R"({"polys": [{"ineqs": [{"a": ["1/0"], "b": "0"}]}]})"),
             "--eps", "1"})
            .code == 1);
  // inadmissible displacement: precondition
  CHECK(cli({"stable-intersect", "--cycle", data("curve3d"), "--cycle", data("plane13"), "--vector", "1,0,0"}).code ==
        2);
  // the trivial fan does not compactify the ray
  std::string trivial = temp_file("trivial_fan2.json", json::write_fan(Fan::trivial(3)).dump());
  CHECK(cli({"decompose", "--coll", data("coll_r1"), "--fan", trivial}).code == 2);
  CHECK(cli({"thicken", "--coll", data("coll_r1"), "--eps", "0"}).code == 1);
  CHECK(cli({"--help"}).code == 0);
  CHECK(exit_code_for(ErrorKind::InternalCheck) == 3);
  CHECK(exit_code_for(ErrorKind::NotCompactifying) == 2);
  CHECK(exit_code_for(ErrorKind::Parse) == 1);
}

TEST_CASE("output file") {
  auto path = (std::filesystem::temp_directory_path() / "troplift_test_out.json").string();
  std::filesystem::remove(path);
  Run r = cli({"-o", path, "newton-polygon", "--poly", data("q_newton")});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(load(path)["roots"].size() == 2);
}

TEST_CASE("property: fixtures round-trip through the schema") {
  for (const auto &entry : std::filesystem::directory_iterator(kData)) {
    Json j = load(entry.path().string());
    INFO(entry.path().string());
    Json again;
    if (j.contains("cells")) again = json::write_complex(json::read_complex(j));
    else if (j.contains("cones")) again = json::write_fan(json::read_fan(j));
    else if (j.contains("polys")) again = json::write_collection(json::read_collection(j));
    else if (j.contains("terms")) again = json::write_polynomial(json::read_polynomial(j));
    else if (j.contains("coeff_vals")) again = json::write_valued_poly(json::read_valued_poly(j));
    else if (j.contains("points")) again = json::write_stable(json::read_stable(j));
    else FAIL("unknown fixture kind");
    // parse -> serialize -> parse -> serialize is stable
    Json third;
    if (j.contains("cells")) third = json::write_complex(json::read_complex(again));
    else if (j.contains("cones")) third = json::write_fan(json::read_fan(again));
    else if (j.contains("polys")) third = json::write_collection(json::read_collection(again));
    else if (j.contains("terms")) third = json::write_polynomial(json::read_polynomial(again));
    else if (j.contains("coeff_vals")) third = json::write_valued_poly(json::read_valued_poly(again));
    else third = json::write_stable(json::read_stable(again));
    CHECK(third == again);
  }
  StratifiedSet s = extended_closure(json::read_collection(load(data("coll_r1"))), json::read_fan(load(data("fan_r1"))));
  Json sj = json::write_strata(s);
  CHECK(json::write_strata(json::read_strata(sj)) == sj);
  auto comps = intersect_components(json::read_complex(load(data("curve3d"))), json::read_complex(load(data("plane13"))));
  Json cj = json::write_components(comps);
  CHECK(json::write_components(json::read_components(cj)) == cj);
}

TEST_CASE("scalars in JSON") {
  CHECK(json::read_scalar(Json("3/6")) == Scalar(1, 2));
  CHECK(json::read_scalar(Json(-4)) == -4);
  CHECK(json::write_scalar(Scalar(-3, 4)) == "-3/4");
  CHECK_THROWS_AS(json::read_scalar(Json(0.5)), Error);
  CHECK_THROWS_AS(json::read_integer(Json("1/2")), Error);
  CHECK(json::write_integer(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
  Polyhedron u = Polyhedron::universe(2);
  CHECK(json::read_polyhedron(json::write_polyhedron(u)).same_set(u));
  CHECK(json::read_polyhedron(json::write_polyhedron(Polyhedron::empty(2))).is_empty());
}

TEST_CASE("svg output") {
  WeightedComplex curve = json::read_complex(load(data("curve3d")));
  CHECK_THROWS_AS(render_complex(curve), Error);
  std::string s = render_complex(curve, std::nullopt, SvgOptions{2, 400});
  CHECK(s == render_complex(curve, std::nullopt, SvgOptions{2, 400}));
  CHECK(s.rfind("<svg", 0) == 0);
  std::size_t lines = 0, pos = 0;
  while ((pos = s.find("<line", pos)) != std::string::npos) ++lines, ++pos;
  CHECK(lines == 2 + 3); // axes and three rays
  for (const char *w : {">2</text>", ">3</text>", ">1</text>"}) CHECK(s.find(w) != std::string::npos);

  WeightedComplex empty = WeightedComplex::make(2, 1, {}, {});
  std::string e = render_complex(empty);
  CHECK(e.find("class=\"axes\"") != std::string::npos);
  CHECK(e.find("<text") == std::string::npos);

  Run r1 = cli({"tropicalize", "--poly", data("line_xy1")});
  std::string p = temp_file("line.json", r1.out);
  StableResult st;
  st.points[Vec{0, 0}] = 1;
  std::string sp = temp_file("pt.json", json::write_stable(st).dump());
  Run plot = cli({"plot", "--complex", p, "--stable", sp});
  CHECK(plot.code == 0);
  CHECK(plot.out.find("class=\"points\"") != std::string::npos);
  CHECK(plot.out.find(">1</text>\n</g>") != std::string::npos);
  CHECK(plot.out == cli({"plot", "--complex", p, "--stable", sp}).out);
  CHECK(cli({"plot", "--complex", data("curve3d")}).code == 1);
  CHECK(cli({"plot", "--complex", data("curve3d"), "--project", "2"}).code == 0);
}
