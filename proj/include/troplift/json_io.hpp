#pragma once

#include "troplift/cycles.hpp"
#include "troplift/extended.hpp"
#include "troplift/fan.hpp"
#include "troplift/moving.hpp"
#include "troplift/stable.hpp"
#include "troplift/valuations.hpp"

#include <json.hpp>

#include <vector>

namespace troplift::json {

using Json = nlohmann::ordered_json;

// Every reader throws Error(ErrorKind::Parse) on schema violations. Scalars
// are read from strings ("p", "p/q", decimals) or JSON integers and written
// as strings.
Scalar read_scalar(const Json &j);
Json write_scalar(const Scalar &x);
Integer read_integer(const Json &j);
// JSON number when it fits in 64 bits, string otherwise.
Json write_integer(const Integer &x);
Vec read_vec(const Json &j);
Json write_vec(const Vec &v);

// {"ineqs":[{"a":[...],"b":"..."}]}; "dim" is required only without rows.
Polyhedron read_polyhedron(const Json &j);
Json write_polyhedron(const Polyhedron &p);
Cone read_cone(const Json &j);

// {"cones":[...]}; faces may be omitted and are added.
Fan read_fan(const Json &j);
Json write_fan(const Fan &f);

// {"dim":n,"polys":[...]}; a weighted complex is accepted as well.
PolyCollection read_collection(const Json &j);
Json write_collection(const PolyCollection &c);

// {"dim":n,"puredim":d,"cells":[{"poly":...,"weight":w}]}
WeightedComplex read_complex(const Json &j);
Json write_complex(const WeightedComplex &c);

// {"terms":[{"exp":[...],"val":"..."}]}
TropicalPolynomial read_polynomial(const Json &j);
Json write_polynomial(const TropicalPolynomial &f);

// {"points":[{"at":[...],"mult":m}]}
StableResult read_stable(const Json &j);
Json write_stable(const StableResult &r);

// {"strata":[{"cone":i,"pieces":[...]}],"fan":...}; empty strata are omitted.
StratifiedSet read_strata(const Json &j);
Json write_strata(const StratifiedSet &s);

// {"coeff_vals":[v_0, ..., v_d]} with null for a zero coefficient.
ValuedPoly read_valued_poly(const Json &j);
Json write_valued_poly(const ValuedPoly &p);
// {"roots":[{"val":"...","mult":m}]}; val is null for the root 0.
Json write_roots(const std::vector<RootValuation> &r);

// {"components":[{"bounded":b,"cells":[...]}]}
Json write_components(const std::vector<Component> &cs);
std::vector<Component> read_components(const Json &j);

Json write_moving(const MovingData &m, const MovingReport &rep);

} // namespace troplift::json
