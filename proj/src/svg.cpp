#include "troplift/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace troplift {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

struct Frame {
  Scalar lo[2], hi[2];
  int size;
  double px(const Vec &p, int k) const {
    double t = Scalar((p[k] - lo[k]) / (hi[k] - lo[k])).get_d();
    return k == 0 ? 20 + t * (size - 40) : size - 20 - t * (size - 40);
  }
};

Polyhedron box(const Frame &f) {
  std::vector<Halfspace> rows;
  for (std::size_t k = 0; k < 2; ++k) {
    rows.push_back({unit_vec(2, k), f.hi[k]});
    rows.push_back({negated(unit_vec(2, k)), -f.lo[k]});
  }
  return Polyhedron(2, rows);
}

// Vertices of a bounded 2D polyhedron in counterclockwise order.
std::vector<Vec> ordered(const Polyhedron &p) {
  std::vector<Vec> vs = vertices(p);
  if (vs.size() < 3) return vs;
  Vec c = zero_vec(2);
  for (const auto &v : vs) c = add(c, v);
  c = scaled(c, Scalar(1, static_cast<long>(vs.size())));
  std::sort(vs.begin(), vs.end(), [&](const Vec &a, const Vec &b) {
    double ta = std::atan2(Scalar(a[1] - c[1]).get_d(), Scalar(a[0] - c[0]).get_d());
    double tb = std::atan2(Scalar(b[1] - c[1]).get_d(), Scalar(b[0] - c[0]).get_d());
    return ta < tb;
  });
  return vs;
}

} // namespace

std::string render_complex(const WeightedComplex &c, const std::optional<StableResult> &points,
                           const SvgOptions &opts) {
  std::vector<Vec> keep;
  if (c.ambient_dim == 3 && opts.drop_coordinate && *opts.drop_coordinate < 3) {
    for (std::size_t k = 0; k < 3; ++k)
      if (k != *opts.drop_coordinate) keep.push_back(unit_vec(3, k));
  } else if (c.ambient_dim == 2 && !opts.drop_coordinate) {
    keep = {unit_vec(2, 0), unit_vec(2, 1)};
  } else {
    throw Error(ErrorKind::UnsupportedDimension, "plots need dimension 2, or 3 with a dropped coordinate");
  }
  std::vector<Polyhedron> cells;
  for (const auto &f : c.facets) cells.push_back(c.ambient_dim == 2 ? f : project_linear(f, keep));
  std::vector<Vec> dots;
  if (points)
    for (const auto &[x, m] : points->points) {
      if (x.size() != c.ambient_dim) throw Error(ErrorKind::DimensionMismatch, "points and complex differ in dimension");
      dots.push_back(apply_rows(keep, x));
    }

  // Box around the origin, the vertices and the points, with a margin.
  Frame fr;
  fr.size = opts.size;
  for (std::size_t k = 0; k < 2; ++k) fr.lo[k] = fr.hi[k] = 0;
  auto extend = [&](const Vec &p) {
    for (std::size_t k = 0; k < 2; ++k) {
      fr.lo[k] = std::min(fr.lo[k], p[k]);
      fr.hi[k] = std::max(fr.hi[k], p[k]);
    }
  };
  for (const auto &p : cells)
    for (const auto &v : p.generators().points) extend(v);
  for (const auto &d : dots) extend(d);
  Scalar span = std::max(Scalar(fr.hi[0] - fr.lo[0]), Scalar(fr.hi[1] - fr.lo[1]));
  Scalar margin = std::max(Scalar(1), Scalar(span / 2));
  for (std::size_t k = 0; k < 2; ++k) {
    fr.lo[k] -= margin;
    fr.hi[k] += margin;
  }
  Polyhedron clip = box(fr);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fr.size << "\" height=\"" << fr.size
      << "\" viewBox=\"0 0 " << fr.size << " " << fr.size << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  Vec xa{fr.lo[0], 0}, xb{fr.hi[0], 0}, ya{0, fr.lo[1]}, yb{0, fr.hi[1]};
  out << "<g class=\"axes\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << num(fr.px(xa, 0)) << "\" y1=\"" << num(fr.px(xa, 1)) << "\" x2=\"" << num(fr.px(xb, 0))
      << "\" y2=\"" << num(fr.px(xb, 1)) << "\"/>\n";
  out << "<line x1=\"" << num(fr.px(ya, 0)) << "\" y1=\"" << num(fr.px(ya, 1)) << "\" x2=\"" << num(fr.px(yb, 0))
      << "\" y2=\"" << num(fr.px(yb, 1)) << "\"/>\n";
  out << "</g>\n";

  out << "<g class=\"cells\" stroke=\"black\" stroke-width=\"2\" fill=\"#9ecae1\" fill-opacity=\"0.5\" "
         "font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Polyhedron q = intersect(cells[i], clip);
    if (q.is_empty()) continue;
    std::vector<Vec> vs = ordered(q);
    Vec mid = q.facial().relint_point;
    if (vs.size() == 1) {
      out << "<circle cx=\"" << num(fr.px(vs[0], 0)) << "\" cy=\"" << num(fr.px(vs[0], 1)) << "\" r=\"3\"/>\n";
    } else if (q.dimension() == 1) {
      mid = scaled(add(vs[0], vs[1]), Scalar(1, 2));
      out << "<line x1=\"" << num(fr.px(vs[0], 0)) << "\" y1=\"" << num(fr.px(vs[0], 1)) << "\" x2=\""
          << num(fr.px(vs[1], 0)) << "\" y2=\"" << num(fr.px(vs[1], 1)) << "\"/>\n";
    } else {
      out << "<polygon points=\"";
      for (std::size_t k = 0; k < vs.size(); ++k) out << (k ? " " : "") << num(fr.px(vs[k], 0)) << "," << num(fr.px(vs[k], 1));
      out << "\"/>\n";
    }
    out << "<text x=\"" << num(fr.px(mid, 0) + 4) << "\" y=\"" << num(fr.px(mid, 1) - 4) << "\" stroke=\"none\" "
        << "fill=\"black\">" << to_string(c.weights[i]) << "</text>\n";
  }
  out << "</g>\n";

  if (points) {
    out << "<g class=\"points\" fill=\"#d62728\" font-family=\"sans-serif\" font-size=\"12\">\n";
    std::size_t k = 0;
    for (const auto &[x, m] : points->points) {
      const Vec &d = dots[k++];
      out << "<circle cx=\"" << num(fr.px(d, 0)) << "\" cy=\"" << num(fr.px(d, 1)) << "\" r=\"5\"/>\n";
      out << "<text x=\"" << num(fr.px(d, 0) + 6) << "\" y=\"" << num(fr.px(d, 1) + 14) << "\">" << to_string(m)
          << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

} // namespace troplift
