#include "polyforge/render.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "polyforge/error.hpp"
#include "polyforge/hull.hpp"

namespace polyforge {

namespace {

struct Point2 {
  double x;
  double y;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

Point2 oblique(const std::vector<double>& c) {
  if (c.size() == 1) return {c[0], 0};
  if (c.size() == 2) return {c[0], c[1]};
  return {c[0] + 0.5 * c[2], c[1] + 0.3 * c[2]};
}

}  // namespace

Vector schlegel_viewpoint(const VPolytope& p, std::size_t facet) {
  const Hull h = convex_hull(p);
  if (facet >= h.polytope.facets.size()) {
    throw PreconditionError("facet index " + std::to_string(facet) + " out of range");
  }
  const Hyperplane& f = h.polytope.facets[facet];
  Vector centroid = zero_vector(p.dim());
  const auto on = h.incidence.facets[facet].indices();
  for (auto v : on) centroid = centroid + p.point(v);
  centroid = Scalar(1, on.size()) * centroid;

  Scalar step = 1;
  for (int tries = 0; tries <= 64; ++tries, step /= 2) {
    const Vector vp = centroid - step * f.normal;
    bool beyond_only = true;
    for (std::size_t k = 0; k < h.polytope.facets.size() && beyond_only; ++k) {
      const int s = sgn(h.polytope.facets[k].evaluate(vp));
      beyond_only = k == facet ? s < 0 : s > 0;
    }
    if (beyond_only) return vp;
  }
  throw PreconditionError("no Schlegel viewpoint found beyond facet " + std::to_string(facet));
}

std::string render_svg(const VPolytope& p, const RenderSpec& spec) {
  const std::size_t d = p.dim();
  if (p.size() == 0) throw PreconditionError("nothing to render");
  std::vector<std::vector<double>> coords(p.size());

  if (spec.projection == RenderSpec::Projection::Coords) {
    const std::set<std::size_t> distinct(spec.axes.begin(), spec.axes.end());
    const bool valid = (spec.axes.size() == 2 || spec.axes.size() == 3) && distinct.size() == spec.axes.size() &&
                       std::all_of(spec.axes.begin(), spec.axes.end(), [&](std::size_t a) { return a >= 1 && a <= d; });
    if (!valid) throw PreconditionError("invalid projection indices");
    for (std::size_t v = 0; v < p.size(); ++v) {
      for (auto a : spec.axes) coords[v].push_back(p.point(v)[a - 1].get_d());
    }
  } else {
    if (!p.full_dimensional()) throw PreconditionError("Schlegel projection needs a full-dimensional polytope");
    const Hull h = convex_hull(p);
    const Vector vp = schlegel_viewpoint(p, spec.facet);
    const Hyperplane& f = h.polytope.facets[spec.facet];
    // The facet hyperplane is a graph over the axes other than the first one
    // its normal involves.
    std::size_t drop = 0;
    while (sgn(f.normal[drop]) == 0) ++drop;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < d && keep.size() < 3; ++j) {
      if (j != drop) keep.push_back(j);
    }
    for (std::size_t v = 0; v < p.size(); ++v) {
      const Vector dir = p.point(v) - vp;
      const Scalar t = (f.offset - dot(f.normal, vp)) / dot(f.normal, dir);
      const Vector x = vp + t * dir;
      for (auto j : keep) coords[v].push_back(x[j].get_d());
    }
  }

  const GeometricGraph g = skeleton(intrinsic(p));
  std::vector<Point2> pts;
  for (const auto& c : coords) pts.push_back(oblique(c));
  double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (const auto& q : pts) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  const double margin = 40;
  const double span = std::max(xmax - xmin, ymax - ymin);
  const double scale = span > 0 ? std::min(spec.width, spec.height) / span * (1 - 2 * margin / std::min(spec.width, spec.height)) : 1;
  auto sx = [&](const Point2& q) { return margin + (q.x - xmin) * scale; };
  // SVG y grows downward.
  auto sy = [&](const Point2& q) { return spec.height - margin - (q.y - ymin) * scale; };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(spec.width) + "\" height=\"" +
                    fmt(spec.height) + "\" viewBox=\"0 0 " + fmt(spec.width) + " " + fmt(spec.height) + "\">\n";
  out += "<g stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const auto& [a, b] : g.edges()) {
    out += "<line x1=\"" + fmt(sx(pts[a])) + "\" y1=\"" + fmt(sy(pts[a])) + "\" x2=\"" + fmt(sx(pts[b])) + "\" y2=\"" +
           fmt(sy(pts[b])) + "\"/>\n";
  }
  out += "</g>\n<g fill=\"white\" stroke=\"black\">\n";
  for (const auto& q : pts) out += "<circle cx=\"" + fmt(sx(q)) + "\" cy=\"" + fmt(sy(q)) + "\" r=\"4\"/>\n";
  out += "</g>\n";
  if (spec.labels) {
    out += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t v = 0; v < pts.size(); ++v) {
      out += "<text x=\"" + fmt(sx(pts[v]) + 6) + "\" y=\"" + fmt(sy(pts[v]) - 6) + "\">" + escape(p.label(v)) + "</text>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace polyforge
