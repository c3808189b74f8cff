#include "troplift/cli.hpp"
#include "troplift/json_io.hpp"
#include "troplift/svg.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace troplift;
using json::Json;

namespace {

Json parse(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::string dump(const Json &j) { return j.dump(); }

} // namespace

PYBIND11_MODULE(_troplift, m) {
  m.doc() = "Exact tropical intersection toolkit (JSON-level bindings)";
  static py::exception<Error> exc(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error &e) {
      py::set_error(exc, (std::string(to_string(e.kind())) + "|" + e.what()).c_str());
    }
  });

  m.def("tropicalize", [](const std::string &poly) {
    return dump(json::write_complex(tropicalize_hypersurface(json::read_polynomial(parse(poly)))));
  });
  m.def("check_balancing", [](const std::string &c) { return check_balancing(json::read_complex(parse(c))).holds(); });
  m.def("stable_intersect", [](const std::string &a, const std::string &b, std::optional<std::string> v) {
    std::optional<Displacement> d;
    if (v) d = Displacement{json::read_vec(parse(*v)), 0, {}};
    return dump(json::write_stable(stable_intersect(json::read_complex(parse(a)), json::read_complex(parse(b)), d)));
  });
  m.def("stable_intersect_multi", [](const std::vector<std::string> &cs) {
    std::vector<WeightedComplex> cycles;
    for (const auto &c : cs) cycles.push_back(json::read_complex(parse(c)));
    return dump(json::write_stable(stable_intersect_multi(cycles)));
  });
  m.def("intersect_components", [](const std::string &a, const std::string &b) {
    return dump(json::write_components(intersect_components(json::read_complex(parse(a)), json::read_complex(parse(b)))));
  });
  m.def("is_compactifying", [](const std::string &fan, const std::string &coll) {
    return is_compactifying(json::read_fan(parse(fan)), json::read_collection(parse(coll))).holds();
  });
  m.def("is_compatible", [](const std::string &fan, const std::string &coll) {
    return is_compatible(json::read_fan(parse(fan)), json::read_collection(parse(coll))).holds();
  });
  m.def("build_compactifying_fan", [](const std::string &coll, bool minimal) {
    return dump(json::write_fan(build_compactifying_fan(json::read_collection(parse(coll)), minimal)));
  });
  m.def("extended_closure", [](const std::string &coll, const std::string &fan) {
    return dump(json::write_strata(extended_closure(json::read_collection(parse(coll)), json::read_fan(parse(fan)))));
  });
  m.def("newton_polygon_valuations", [](const std::string &p) {
    return dump(json::write_roots(newton_polygon_valuations(json::read_valued_poly(parse(p)))));
  });
  m.def("moving_data", [](const std::string &a, const std::string &b, const std::string &fan, const std::string &coll,
                          std::size_t component, std::size_t samples) {
    WeightedComplex ca = json::read_complex(parse(a)), cb = json::read_complex(parse(b));
    auto comps = intersect_components(ca, cb);
    if (component >= comps.size()) throw Error(ErrorKind::PreconditionFailed, "component index out of range");
    CompactifyingDatum d{ca, cb, comps[component], json::read_fan(parse(fan)), json::read_collection(parse(coll))};
    MovingData md = find_moving_data(d);
    return dump(json::write_moving(md, verify_moving_data(d, md, samples)));
  });
  m.def("render_svg", [](const std::string &c, std::optional<std::string> stable, std::optional<std::size_t> drop) {
    std::optional<StableResult> pts;
    if (stable) pts = json::read_stable(parse(*stable));
    return render_complex(json::read_complex(parse(c)), pts, SvgOptions{drop, 400});
  });
  m.def("run_cli", [](const std::vector<std::string> &args) {
    std::vector<std::string> full{"troplift"};
    full.insert(full.end(), args.begin(), args.end());
    std::ostringstream out, err;
    int code = run(full, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
