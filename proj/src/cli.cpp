#include "troplift/cli.hpp"

#include "troplift/json_io.hpp"
#include "troplift/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>

namespace troplift {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::NotPointed:
  case ErrorKind::NotCompactifying:
  case ErrorKind::NotTransverse:
  case ErrorKind::NotAdmissible:
  case ErrorKind::PreconditionFailed:
    return kExitPrecondition;
  case ErrorKind::InternalCheck:
    return kExitInternal;
  default:
    return kExitInput;
  }
}

namespace {

using json::Json;

Json load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

Vec parse_vector(const std::string &text) {
  Vec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_scalar(item));
  if (v.empty()) throw Error(ErrorKind::Parse, "empty vector '" + text + "'");
  return v;
}

struct Options {
  std::string output;
  std::uint64_t seed = 0x5eed2026;
  std::vector<std::string> cycles;
  std::string fan, coll, poly, complex, stable;
  std::string vector;
  std::string eps;
  std::size_t component = 0;
  std::size_t samples = 4;
  std::size_t embed = 0;
  std::optional<std::size_t> project;
  bool minimal = false, compatible = false, compactifying = false, smooth = false;
};

WeightedComplex cycle(const Options &o, std::size_t i) { return json::read_complex(load(o.cycles.at(i))); }

Json verdict_json(bool holds, Json counterexample) {
  Json j{{"holds", holds}};
  if (!holds) j["counterexample"] = std::move(counterexample);
  return j;
}

// Embeds a complex in Q^m, m >= n, by x -> (x, 0, ..., 0).
WeightedComplex embed(const WeightedComplex &c, std::size_t m) {
  if (m < c.ambient_dim) throw Error(ErrorKind::DimensionMismatch, "cannot embed into a smaller space");
  std::vector<Polyhedron> fs;
  for (const auto &f : c.facets) {
    std::vector<Halfspace> rows;
    for (const auto &h : f.ineqs()) {
      Vec a = h.normal;
      a.resize(m, Scalar(0));
      rows.push_back({a, h.offset});
    }
    for (std::size_t k = c.ambient_dim; k < m; ++k) {
      rows.push_back({unit_vec(m, k), 0});
      rows.push_back({negated(unit_vec(m, k)), 0});
    }
    fs.emplace_back(m, rows);
  }
  return WeightedComplex::make(m, c.pure_dim, fs, c.weights);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact tropical intersection toolkit", args.empty() ? "troplift" : args[0]};
  app.require_subcommand(1);
  Options o;
  app.add_option("-o,--output", o.output, "Output file (default: standard output)");
  app.add_option("--seed", o.seed, "Seed for randomized choices");

  std::string produced;           // text to write
  std::function<void()> action;   // runs the chosen subcommand
  auto emit = [&](const Json &j) { produced = j.dump(2) + "\n"; };

  auto *si = app.add_subcommand("stable-intersect", "Stable intersection of two cycles");
  si->add_option("--cycle", o.cycles, "Weighted complex (twice)")->required()->expected(2);
  si->add_option("--vector", o.vector, "Displacement vector, comma separated");
  si->callback([&] {
    action = [&] {
      std::optional<Displacement> d;
      if (!o.vector.empty()) d = Displacement{parse_vector(o.vector), 0, {}};
      emit(json::write_stable(stable_intersect(cycle(o, 0), cycle(o, 1), d)));
    };
  });

  auto *sm = app.add_subcommand("stable-intersect-multi", "Stable intersection of several cycles");
  sm->add_option("--cycle", o.cycles, "Weighted complex (at least twice)")->required()->expected(2, 64);
  sm->callback([&] {
    action = [&] {
      std::vector<WeightedComplex> cs;
      for (std::size_t i = 0; i < o.cycles.size(); ++i) cs.push_back(cycle(o, i));
      emit(json::write_stable(stable_intersect_multi(cs)));
    };
  });

  auto *co = app.add_subcommand("components", "Connected components of the support intersection");
  co->add_option("--cycle", o.cycles, "Weighted complex (twice)")->required()->expected(2);
  co->callback([&] { action = [&] { emit(json::write_components(intersect_components(cycle(o, 0), cycle(o, 1)))); }; });

  auto *cf = app.add_subcommand("compactify", "Build a compactifying fan for a collection");
  cf->add_option("--coll,--complex", o.coll, "Polyhedral collection")->required();
  cf->add_flag("--minimal", o.minimal, "Support only the recession cones");
  cf->callback([&] {
    action = [&] { emit(json::write_fan(build_compactifying_fan(json::read_collection(load(o.coll)), o.minimal))); };
  });

  auto *ck = app.add_subcommand("check", "Check a fan predicate");
  ck->add_option("--fan", o.fan, "Fan")->required();
  ck->add_option("--coll,--complex", o.coll, "Polyhedral collection");
  auto *g1 = ck->add_flag("--compatible", o.compatible, "Fan is compatible with the collection");
  auto *g2 = ck->add_flag("--compactifying", o.compactifying, "Fan is compactifying for the collection");
  auto *g3 = ck->add_flag("--smooth", o.smooth, "Fan is smooth");
  g1->excludes(g2)->excludes(g3);
  g2->excludes(g3);
  ck->callback([&] {
    if (!o.compatible && !o.compactifying && !o.smooth)
      throw CLI::ValidationError("check", "one of --compatible, --compactifying, --smooth is required");
    if ((o.compatible || o.compactifying) && o.coll.empty())
      throw CLI::ValidationError("check", "--coll is required");
    action = [&] {
      Fan fan = json::read_fan(load(o.fan));
      if (o.smooth) {
        auto v = is_smooth(fan);
        emit(verdict_json(v.holds(), v.holds() ? Json() : Json{{"cone", *v.counterexample}}));
        return;
      }
      PolyCollection c = json::read_collection(load(o.coll));
      if (o.compatible) {
        auto v = is_compatible(fan, c);
        Json w;
        if (!v) w = Json{{"cone", v.counterexample->first}, {"poly", v.counterexample->second}};
        emit(verdict_json(v.holds(), w));
      } else {
        auto v = is_compactifying(fan, c);
        Json w;
        if (!v) w = Json{{"poly", v.counterexample->poly}, {"direction", json::write_vec(v.counterexample->direction)}};
        emit(verdict_json(v.holds(), w));
      }
    };
  });

  auto *cl = app.add_subcommand("closure", "Closure of a collection in the toric partial compactification");
  cl->add_option("--coll,--complex", o.coll, "Polyhedral collection")->required();
  cl->add_option("--fan", o.fan, "Fan")->required();
  cl->callback([&] {
    action = [&] {
      emit(json::write_strata(extended_closure(json::read_collection(load(o.coll)), json::read_fan(load(o.fan)))));
    };
  });

  auto *de = app.add_subcommand("decompose", "Decomposition of a collection along a fan");
  de->add_option("--coll,--complex", o.coll, "Polyhedral collection")->required();
  de->add_option("--fan", o.fan, "Fan")->required();
  de->callback([&] {
    action = [&] {
      emit(json::write_collection(delta_decompose(json::read_collection(load(o.coll)), json::read_fan(load(o.fan)))));
    };
  });

  auto *th = app.add_subcommand("thicken", "Thicken every polyhedron of a collection");
  th->add_option("--coll,--complex", o.coll, "Polyhedral collection")->required();
  th->add_option("--eps", o.eps, "Thickening amount")->required();
  th->callback([&] {
    action = [&] { emit(json::write_collection(thicken(json::read_collection(load(o.coll)), parse_scalar(o.eps)))); };
  });

  auto *mv = app.add_subcommand("moving-data", "Find and verify tropical moving data");
  mv->add_option("--cycle", o.cycles, "Weighted complex (twice)")->required()->expected(2);
  mv->add_option("--fan", o.fan, "Fan")->required();
  mv->add_option("--coll,--complex", o.coll, "Polyhedral collection around the component")->required();
  mv->add_option("--component", o.component, "Index of the component of the support intersection");
  mv->add_option("--samples", o.samples, "Extra sampled displacements per side");
  mv->callback([&] {
    action = [&] {
      WeightedComplex a = cycle(o, 0), b = cycle(o, 1);
      auto comps = intersect_components(a, b);
      if (o.component >= comps.size())
        throw Error(ErrorKind::PreconditionFailed, "component index out of range");
      CompactifyingDatum d{a, b, comps[o.component], json::read_fan(load(o.fan)), json::read_collection(load(o.coll))};
      MovingData m = find_moving_data(d);
      MovingReport rep = verify_moving_data(d, m, o.samples);
      emit(json::write_moving(m, rep));
      if (!rep.ok()) throw Error(ErrorKind::InternalCheck, "moving data failed verification: " + rep.failures.front());
    };
  });

  auto *tr = app.add_subcommand("tropicalize", "Tropical hypersurface of a tropical polynomial");
  tr->add_option("--poly", o.poly, "Tropical polynomial")->required();
  tr->add_option("--embed", o.embed, "Embed into Q^m by appending zero coordinates");
  tr->callback([&] {
    action = [&] {
      WeightedComplex c = tropicalize_hypersurface(json::read_polynomial(load(o.poly)));
      if (o.embed) c = embed(c, o.embed);
      emit(json::write_complex(c));
    };
  });

  auto *np = app.add_subcommand("newton-polygon", "Root valuations from the Newton polygon");
  np->add_option("--poly", o.poly, "Coefficient valuations")->required();
  np->callback([&] {
    action = [&] { emit(json::write_roots(newton_polygon_valuations(json::read_valued_poly(load(o.poly))))); };
  });

  auto *pl = app.add_subcommand("plot", "SVG drawing of a complex in the plane");
  pl->add_option("--complex", o.complex, "Weighted complex")->required();
  pl->add_option("--stable", o.stable, "Stable intersection points to overlay");
  pl->add_option("--project", o.project, "Coordinate to delete for complexes in Q^3");
  pl->callback([&] {
    action = [&] {
      std::optional<StableResult> pts;
      if (!o.stable.empty()) pts = json::read_stable(load(o.stable));
      produced = render_complex(json::read_complex(load(o.complex)), pts, SvgOptions{o.project, 400});
    };
  });

  try {
    std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rev.begin(), rev.end());
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    action();
    if (o.output.empty()) {
      out << produced;
    } else {
      std::ofstream f(o.output);
      if (!f) throw Error(ErrorKind::Parse, "cannot write " + o.output);
      f << produced;
    }
    return kExitOk;
  } catch (const Error &e) {
    if (!produced.empty() && e.kind() == ErrorKind::InternalCheck) {
      if (o.output.empty()) out << produced;
      else std::ofstream(o.output) << produced;
    }
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception &e) {
    err << "Parse: " << e.what() << "\n";
    return kExitInput;
  }
}

} // namespace troplift
