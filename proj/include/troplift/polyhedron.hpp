#pragma once

#include "troplift/errors.hpp"
#include "troplift/scalar.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace troplift {

// <normal, x> <= offset
struct Halfspace {
  Vec normal;
  Scalar offset;

  friend bool operator==(const Halfspace &, const Halfspace &) = default;
};

// V-representation: conv(points) + cone(rays) + span(lineality). Rays are
// primitive integral; for non-pointed sets the points are representatives of
// the minimal faces.
struct Generators {
  std::vector<Vec> points;
  std::vector<Vec> rays;
  std::vector<Vec> lineality;
};

// Facial data derived by exact LP from the H-representation.
struct FacialData {
  bool empty = true;
  int dim = -1;
  std::vector<std::size_t> equalities; // implicit equality rows
  std::vector<std::size_t> facets;     // irredundant non-equality rows
  Vec relint_point;
};

struct RelintPoint {
  Vec point;
  std::size_t dim;
};

namespace detail {
struct PolyCache;
}

// Rational polyhedron {x : <a_i, x> <= b_i} in Q^n. Rows are stored with
// primitive integral normals, deduplicated and sorted; rows with zero normal
// are dropped unless infeasible. Immutable; derived data is computed once on
// first use and shared between copies.
class Polyhedron {
public:
  Polyhedron() : Polyhedron(0, {}) {}
  Polyhedron(std::size_t ambient_dim, std::vector<Halfspace> ineqs);

  static Polyhedron universe(std::size_t n);
  static Polyhedron empty(std::size_t n);
  static Polyhedron point(const Vec &p);
  // Rational linear subspace spanned by the given vectors.
  static Polyhedron subspace(std::size_t n, const std::vector<Vec> &basis);
  // conv(points) + cone(rays) + span(lineality); empty when points is empty.
  static Polyhedron from_generators(std::size_t n, const std::vector<Vec> &points,
                                    const std::vector<Vec> &rays,
                                    const std::vector<Vec> &lineality = {});

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Halfspace> &ineqs() const { return ineqs_; }

  const FacialData &facial() const;
  const Generators &generators() const;

  bool is_empty() const { return facial().empty; }
  int dimension() const { return facial().dim; }
  bool is_pointed() const { return generators().lineality.empty(); }
  bool is_bounded() const { return generators().rays.empty() && generators().lineality.empty(); }
  bool is_cone() const;

  bool contains(const Vec &x) const;
  // x satisfies every non-equality row strictly and every equality exactly.
  bool contains_relint(const Vec &x) const;
  // q ⊆ *this
  bool contains(const Polyhedron &q) const;
  bool same_set(const Polyhedron &q) const;

  // Normals of the implicit equalities and their offsets, as rows.
  std::vector<Halfspace> equations() const;
  // Basis of span(P - P).
  std::vector<Vec> direction_basis() const;
  // Canonical integral basis of span(P - P) ∩ Z^n.
  std::vector<Vec> direction_lattice() const;

  // Irredundant H-representation: facets plus equalities written as pairs of
  // opposite inequalities in reduced form.
  Polyhedron minimized() const;

  // Equal sets give equal keys.
  const std::string &key() const;

  std::string str() const;

private:
  std::size_t dim_ = 0;
  std::vector<Halfspace> ineqs_;
  std::shared_ptr<detail::PolyCache> cache_;
};

// A polyhedral cone (every offset zero).
class Cone {
public:
  Cone() = default;
  explicit Cone(Polyhedron p);
  static Cone origin(std::size_t n);
  static Cone from_rays(std::size_t n, const std::vector<Vec> &rays,
                        const std::vector<Vec> &lineality = {});

  const Polyhedron &poly() const { return p_; }
  operator const Polyhedron &() const { return p_; } // NOLINT
  std::size_t ambient_dim() const { return p_.ambient_dim(); }
  int dimension() const { return p_.dimension(); }
  const std::vector<Vec> &rays() const { return p_.generators().rays; }
  bool is_pointed() const { return p_.is_pointed(); }
  const std::string &key() const { return p_.key(); }

private:
  Polyhedron p_;
};

Polyhedron intersect(const Polyhedron &a, const Polyhedron &b);
Polyhedron translate(const Polyhedron &p, const Vec &v);
Polyhedron scale(const Polyhedron &p, const Scalar &t);
Polyhedron with_equation(const Polyhedron &p, const Halfspace &eq);
// Cartesian product in Q^(n_a + n_b).
Polyhedron product(const Polyhedron &a, const Polyhedron &b);

// Throws EmptyInput for empty p.
Cone recession_cone(const Polyhedron &p);
RelintPoint relint_point(const Polyhedron &p);
// Throws NotPointed / EmptyInput.
std::vector<Vec> vertices(const Polyhedron &p);
Polyhedron minkowski_sum(const Polyhedron &p, const Cone &c);

// Image of p under x -> (<r_k, x>)_k, by Fourier-Motzkin elimination.
Polyhedron project_linear(const Polyhedron &p, const std::vector<Vec> &map_rows);
// Image under the quotient N_R -> N_R / span(sigma), in the coordinates of
// quotient_basis(sigma).
Polyhedron project(const Polyhedron &p, const Cone &sigma);
Polyhedron project(const Polyhedron &p, const std::vector<Vec> &subspace_basis);
// Integral rows spanning span(sigma)^⊥ ∩ Z^n (row HNF); the quotient coordinates.
std::vector<Vec> quotient_basis(const Cone &sigma);
std::vector<Vec> quotient_basis(std::size_t n, const std::vector<Vec> &subspace_basis);
Vec apply_rows(const std::vector<Vec> &rows, const Vec &x);

// Smallest face of p containing x (x must lie in p).
Polyhedron smallest_face(const Polyhedron &p, const Vec &x);
// f is a nonempty face of p.
bool is_face(const Polyhedron &f, const Polyhedron &p);
// A point satisfying every closed row and every strict row strictly, if any.
std::optional<Vec> strict_point(std::size_t n, const std::vector<Halfspace> &closed,
                                const std::vector<Halfspace> &strict);

// All nonempty faces of p (p included), sorted by dimension.
std::vector<Polyhedron> faces(const Polyhedron &p);
// Facets of p as polyhedra.
std::vector<Polyhedron> facet_polyhedra(const Polyhedron &p);

// Closed interval with optional infinite ends, or empty.
struct Interval {
  bool empty = true;
  std::optional<Scalar> lo;
  std::optional<Scalar> hi;

  static Interval none() { return {}; }
  static Interval closed(Scalar a, Scalar b) { return {false, std::move(a), std::move(b)}; }
  bool contains(const Scalar &t) const;
  bool is_point() const { return !empty && lo && hi && *lo == *hi; }
  std::string str() const;
  friend bool operator==(const Interval &, const Interval &) = default;
};

// {x : <u_i, x> <= b0_i + b1_i * t}, t in [t_lo, t_hi].
struct AffineFamily {
  struct Row {
    Vec normal;
    Scalar b0;
    Scalar b1;
  };
  std::size_t ambient_dim = 0;
  Scalar t_lo;
  Scalar t_hi;
  std::vector<Row> rows;

  Polyhedron fiber(const Scalar &t) const;
  // The (t, x) graph as a polyhedron in Q^(1+n), t first, t-range included.
  Polyhedron graph() const;
};

// {t in [t_lo, t_hi] : fiber(t) nonempty}, by eliminating x.
Interval family_nonempty_set(const AffineFamily &f);
// Same for a joint polyhedron whose coordinate `param` is the parameter; the
// parameter range is whatever the polyhedron imposes (possibly unbounded).
Interval parameter_set(const Polyhedron &joint, std::size_t param);

struct PolyCollection {
  std::size_t ambient_dim = 0;
  std::vector<Polyhedron> polys;
};

// Covering test for finite unions: returns a point of p outside every q, or
// nullopt when p ⊆ q_1 ∪ ... ∪ q_k.
std::optional<Vec> uncovered_point(const Polyhedron &p, const std::vector<Polyhedron> &qs);
// Point of p lying in no open interior int(q_i) (interior in Q^n), or nullopt
// when p ⊆ int(q_1) ∪ ... ∪ int(q_k).
std::optional<Vec> uncovered_by_interiors(const Polyhedron &p, const std::vector<Polyhedron> &qs);

} // namespace troplift
