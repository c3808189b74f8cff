#include "troplift/json_io.hpp"

#include <limits>

namespace troplift::json {

namespace {

[[noreturn]] void bad(const std::string &what) { throw Error(ErrorKind::Parse, what); }

const Json &field(const Json &j, const char *key) {
  if (!j.is_object()) bad(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key '") + key + "'");
  return *it;
}

const Json &array_field(const Json &j, const char *key) {
  const Json &a = field(j, key);
  if (!a.is_array()) bad(std::string("'") + key + "' must be an array");
  return a;
}

std::size_t read_size(const Json &j, const char *what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a nonnegative integer");
  return static_cast<std::size_t>(j.get<long long>());
}

std::size_t dim_of(const std::vector<Polyhedron> &ps, const Json &j, const char *what) {
  if (j.contains("dim")) return read_size(j["dim"], "dim");
  if (ps.empty()) bad(std::string(what) + " without members needs \"dim\"");
  return ps.front().ambient_dim();
}

void check_dims(const std::vector<Polyhedron> &ps, std::size_t n) {
  for (const auto &p : ps)
    if (p.ambient_dim() != n) bad("polyhedra of different dimensions");
}

} // namespace

Scalar read_scalar(const Json &j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(Integer(std::to_string(j.get<long long>())));
  if (j.is_number_unsigned()) return Scalar(Integer(std::to_string(j.get<unsigned long long>())));
  bad("expected a scalar string or integer, got " + j.dump());
}

Json write_scalar(const Scalar &x) { return to_string(x); }

Integer read_integer(const Json &j) {
  Scalar s = read_scalar(j);
  if (s.get_den() != 1) bad("expected an integer, got " + j.dump());
  return s.get_num();
}

Json write_integer(const Integer &x) {
  if (x.fits_slong_p()) return static_cast<long long>(x.get_si());
  return x.get_str();
}

Vec read_vec(const Json &j) {
  if (!j.is_array()) bad("expected an array of scalars, got " + j.dump());
  Vec v;
  for (const auto &x : j) v.push_back(read_scalar(x));
  return v;
}

Json write_vec(const Vec &v) {
  Json a = Json::array();
  for (const auto &x : v) a.push_back(write_scalar(x));
  return a;
}

Polyhedron read_polyhedron(const Json &j) {
  const Json &rows = array_field(j, "ineqs");
  std::vector<Halfspace> hs;
  for (const auto &r : rows) hs.push_back({read_vec(field(r, "a")), read_scalar(field(r, "b"))});
  std::size_t n = 0;
  if (j.contains("dim")) n = read_size(j["dim"], "dim");
  else if (!hs.empty()) n = hs.front().normal.size();
  else bad("polyhedron without inequalities needs \"dim\"");
  for (const auto &h : hs)
    if (h.normal.size() != n) bad("inequality normal of length " + std::to_string(h.normal.size()) + " in dimension " + std::to_string(n));
  return Polyhedron(n, std::move(hs));
}

Json write_polyhedron(const Polyhedron &p) {
  Json j = Json::object();
  if (p.ineqs().empty()) j["dim"] = p.ambient_dim();
  Json rows = Json::array();
  for (const auto &h : p.ineqs()) rows.push_back(Json{{"a", write_vec(h.normal)}, {"b", write_scalar(h.offset)}});
  j["ineqs"] = std::move(rows);
  return j;
}

Cone read_cone(const Json &j) {
  Polyhedron p = read_polyhedron(j);
  for (const auto &h : p.ineqs())
    if (sgn(h.offset) != 0) bad("cone inequality with nonzero offset");
  return Cone(p);
}

Fan read_fan(const Json &j) {
  std::vector<Cone> cones;
  for (const auto &c : array_field(j, "cones")) cones.push_back(read_cone(c));
  std::vector<Polyhedron> ps(cones.begin(), cones.end());
  std::size_t n = dim_of(ps, j, "fan");
  check_dims(ps, n);
  return Fan(n, cones);
}

Json write_fan(const Fan &f) {
  Json cones = Json::array();
  for (const auto &c : f.cones()) cones.push_back(write_polyhedron(c.poly()));
  return Json{{"dim", f.ambient_dim()}, {"cones", std::move(cones)}};
}

PolyCollection read_collection(const Json &j) {
  if (j.is_object() && j.contains("cells")) {
    WeightedComplex c = read_complex(j);
    return support(c);
  }
  std::vector<Polyhedron> ps;
  for (const auto &p : array_field(j, "polys")) ps.push_back(read_polyhedron(p));
  std::size_t n = dim_of(ps, j, "collection");
  check_dims(ps, n);
  return {n, std::move(ps)};
}

Json write_collection(const PolyCollection &c) {
  Json ps = Json::array();
  for (const auto &p : c.polys) ps.push_back(write_polyhedron(p));
  return Json{{"dim", c.ambient_dim}, {"polys", std::move(ps)}};
}

WeightedComplex read_complex(const Json &j) {
  std::size_t n = read_size(field(j, "dim"), "dim");
  const Json &pd = field(j, "puredim");
  if (!pd.is_number_integer()) bad("puredim must be an integer");
  std::vector<Polyhedron> facets;
  std::vector<Integer> weights;
  for (const auto &c : array_field(j, "cells")) {
    facets.push_back(read_polyhedron(field(c, "poly")));
    weights.push_back(c.contains("weight") ? read_integer(c["weight"]) : Integer(1));
  }
  check_dims(facets, n);
  try {
    return WeightedComplex::make(n, pd.get<int>(), facets, weights);
  } catch (const Error &e) {
    bad(std::string("invalid complex: ") + e.what());
  }
}

Json write_complex(const WeightedComplex &c) {
  Json cells = Json::array();
  for (std::size_t i = 0; i < c.facets.size(); ++i)
    cells.push_back(Json{{"poly", write_polyhedron(c.facets[i])}, {"weight", write_integer(c.weights[i])}});
  return Json{{"dim", c.ambient_dim}, {"puredim", c.pure_dim}, {"cells", std::move(cells)}};
}

TropicalPolynomial read_polynomial(const Json &j) {
  TropicalPolynomial f;
  const Json &terms = array_field(j, "terms");
  for (const auto &t : terms) f.terms.push_back({read_vec(field(t, "exp")), read_scalar(field(t, "val"))});
  if (j.contains("vars")) f.num_vars = read_size(j["vars"], "vars");
  else if (!f.terms.empty()) f.num_vars = f.terms.front().exponent.size();
  else bad("polynomial without terms needs \"vars\"");
  for (const auto &t : f.terms)
    if (t.exponent.size() != f.num_vars) bad("exponents of different lengths");
  return f;
}

Json write_polynomial(const TropicalPolynomial &f) {
  Json terms = Json::array();
  for (const auto &t : f.terms) terms.push_back(Json{{"exp", write_vec(t.exponent)}, {"val", write_scalar(t.val)}});
  return Json{{"terms", std::move(terms)}};
}

StableResult read_stable(const Json &j) {
  StableResult r;
  std::optional<std::size_t> n;
  for (const auto &p : array_field(j, "points")) {
    Vec x = read_vec(field(p, "at"));
    if (n && *n != x.size()) bad("points of different dimensions");
    n = x.size();
    Integer m = read_integer(field(p, "mult"));
    if (sgn(m) <= 0) bad("multiplicities must be positive");
    r.points[x] += m;
  }
  return r;
}

Json write_stable(const StableResult &r) {
  Json pts = Json::array();
  for (const auto &[x, m] : r.points) pts.push_back(Json{{"at", write_vec(x)}, {"mult", write_integer(m)}});
  return Json{{"points", std::move(pts)}};
}

StratifiedSet read_strata(const Json &j) {
  StratifiedSet s(read_fan(field(j, "fan")));
  for (const auto &st : array_field(j, "strata")) {
    std::size_t i = read_size(field(st, "cone"), "cone");
    if (i >= s.fan.size()) bad("stratum index out of range");
    std::size_t qd = s.fan.ambient_dim() - static_cast<std::size_t>(s.fan[i].dimension());
    for (const auto &p : array_field(st, "pieces")) {
      Polyhedron q = read_polyhedron(p);
      if (q.ambient_dim() != qd) bad("piece of the wrong dimension for its stratum");
      s.pieces[i].push_back(q);
    }
  }
  return s;
}

Json write_strata(const StratifiedSet &s) {
  Json strata = Json::array();
  for (std::size_t i = 0; i < s.pieces.size(); ++i) {
    if (s.pieces[i].empty()) continue;
    Json ps = Json::array();
    for (const auto &p : s.pieces[i]) ps.push_back(write_polyhedron(p));
    strata.push_back(Json{{"cone", i}, {"pieces", std::move(ps)}});
  }
  return Json{{"strata", std::move(strata)}, {"fan", write_fan(s.fan)}};
}

ValuedPoly read_valued_poly(const Json &j) {
  ValuedPoly p;
  for (const auto &c : array_field(j, "coeff_vals")) {
    if (c.is_null()) p.coeff_vals.push_back(std::nullopt);
    else p.coeff_vals.push_back(read_scalar(c));
  }
  return p;
}

Json write_valued_poly(const ValuedPoly &p) {
  Json a = Json::array();
  for (const auto &c : p.coeff_vals) a.push_back(c ? write_scalar(*c) : Json(nullptr));
  return Json{{"coeff_vals", std::move(a)}};
}

Json write_roots(const std::vector<RootValuation> &r) {
  Json a = Json::array();
  for (const auto &x : r) a.push_back(Json{{"val", x.val ? write_scalar(*x.val) : Json(nullptr)}, {"mult", x.mult}});
  return Json{{"roots", std::move(a)}};
}

Json write_components(const std::vector<Component> &cs) {
  Json a = Json::array();
  for (const auto &c : cs) {
    Json cells = Json::array();
    for (const auto &p : c.cells) cells.push_back(write_polyhedron(p));
    a.push_back(Json{{"bounded", c.bounded}, {"cells", std::move(cells)}});
  }
  return Json{{"components", std::move(a)}};
}

std::vector<Component> read_components(const Json &j) {
  std::vector<Component> out;
  for (const auto &c : array_field(j, "components")) {
    Component comp;
    const Json &b = field(c, "bounded");
    if (!b.is_boolean()) bad("'bounded' must be a boolean");
    comp.bounded = b.get<bool>();
    for (const auto &p : array_field(c, "cells")) comp.cells.push_back(read_polyhedron(p));
    out.push_back(std::move(comp));
  }
  return out;
}

Json write_moving(const MovingData &m, const MovingReport &rep) {
  Json amounts = Json::array();
  for (const auto &a : m.amounts) amounts.push_back(write_scalar(a));
  Json samples = Json::array();
  for (const auto &s : rep.samples) {
    Json pts = Json::array();
    for (const auto &x : s.points) pts.push_back(write_vec(x));
    samples.push_back(Json{{"r", write_scalar(s.r)},
                           {"points", std::move(pts)},
                           {"total", write_integer(s.total)},
                           {"finite", s.finite},
                           {"interior", s.interior},
                           {"transverse", s.transverse}});
  }
  Json failures = Json::array();
  for (const auto &f : rep.failures) failures.push_back(f);
  return Json{{"thickened", write_collection(m.thickened)},
              {"amounts", std::move(amounts)},
              {"eps", write_scalar(m.eps)},
              {"v", write_vec(m.v.v)},
              {"report",
               Json{{"ok", rep.ok()},
                    {"expected_total", write_integer(rep.expected_total)},
                    {"failures", std::move(failures)},
                    {"samples", std::move(samples)}}}};
}

} // namespace troplift::json
