#include "polyforge/hull.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "polyforge/double_description.hpp"
#include "polyforge/error.hpp"

namespace polyforge {

namespace {

std::set<std::set<std::string>> facet_label_sets(const Hull& h) {
  std::set<std::set<std::string>> out;
  for (const auto& f : h.incidence.facets) {
    std::set<std::string> s;
    for (auto v : f.indices()) s.insert(h.incidence.vertex_labels[v]);
    out.insert(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<std::string> Hull::redundant_labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < is_vertex.size(); ++i) {
    if (!is_vertex[i]) out.push_back(incidence.vertex_labels[i]);
  }
  return out;
}

Hull convex_hull(const VPolytope& p, const HullOptions& options) {
  const std::size_t d = p.dim();
  if (d > options.max_dim) {
    throw PreconditionError("dimension " + std::to_string(d) + " exceeds limit " + std::to_string(options.max_dim));
  }
  if (p.size() > options.max_vertices) {
    throw PreconditionError(std::to_string(p.size()) + " points exceed limit " + std::to_string(options.max_vertices));
  }
  if (!p.full_dimensional()) {
    throw PreconditionError("point set is not full-dimensional: affine dimension " + std::to_string(p.affine_dim()) +
                            " in Q^" + std::to_string(d));
  }

  std::vector<IntVector> rows;
  rows.reserve(p.size());
  for (const auto& v : p.vertices()) {
    Vector row{Scalar(1)};
    row.insert(row.end(), v.point.begin(), v.point.end());
    rows.push_back(primitive_integer(row));
  }

  Hull hull;
  hull.polytope.dim = d;
  for (const auto& y : extreme_rays(rows)) {
    Hyperplane h;
    h.normal = to_rational(IntVector(y.begin() + 1, y.end()));
    h.offset = -Scalar(y.front());
    hull.polytope.facets.push_back(canonical_oriented(h));
  }
  std::sort(hull.polytope.facets.begin(), hull.polytope.facets.end());

  hull.incidence.dim = d;
  hull.incidence.vertex_labels = p.labels();
  for (const auto& h : hull.polytope.facets) {
    VertexSet on(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (h.contains(p.point(i))) on.set(i);
    }
    hull.incidence.facets.push_back(std::move(on));
  }

  hull.is_vertex.assign(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool repeat = false;
    for (std::size_t j = 0; j < i && !repeat; ++j) repeat = p.point(j) == p.point(i);
    if (repeat) continue;
    Matrix normals;
    for (std::size_t f = 0; f < hull.polytope.facets.size(); ++f) {
      if (hull.incidence.facets[f].test(i)) normals.push_back(hull.polytope.facets[f].normal);
    }
    hull.is_vertex[i] = normals.size() >= d && rank(normals, d) == d;
  }
  return hull;
}

std::vector<Vector> vertices_from_inequalities(const std::vector<Hyperplane>& halfspaces, std::size_t dim) {
  std::vector<IntVector> rows;
  Vector t_row = zero_vector(dim + 1);
  t_row[0] = 1;
  rows.push_back(primitive_integer(t_row));
  for (const auto& h : halfspaces) {
    if (h.normal.size() != dim) throw PreconditionError("half-space dimension mismatch");
    Vector row{-h.offset};
    row.insert(row.end(), h.normal.begin(), h.normal.end());
    rows.push_back(primitive_integer(row));
  }
  std::vector<IntVector> rays;
  try {
    rays = extreme_rays(rows);
  } catch (const PreconditionError&) {
    throw PreconditionError("half-space system is unbounded");
  }
  std::vector<Vector> out;
  for (const auto& y : rays) {
    if (sgn(y.front()) == 0) throw PreconditionError("half-space system is unbounded");
    Vector x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = Scalar(y[i + 1], y.front());
    for (auto& c : x) c.canonicalize();
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> redundant_points(const VPolytope& p) {
  return convex_hull(intrinsic(p), HullOptions{std::numeric_limits<std::size_t>::max(), 64})
      .redundant_labels();
}

void require_irredundant(const VPolytope& p) {
  if (p.affine_dim() <= 0) {
    if (p.size() > 1) throw PreconditionError("point '" + p.label(1) + "' repeats '" + p.label(0) + "'");
    return;
  }
  const auto bad = redundant_points(p);
  if (!bad.empty()) throw PreconditionError("point '" + bad.front() + "' is not a vertex of the hull");
}

VPolytope hull_vertices(std::size_t dim, std::vector<LabeledPoint> points) {
  std::vector<LabeledPoint> unique;
  for (auto& p : points) {
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const LabeledPoint& q) { return q.point == p.point; });
    if (!seen) unique.push_back(std::move(p));
  }
  VPolytope all(dim, std::move(unique));
  if (all.affine_dim() <= 0) return all;
  const Hull h = convex_hull(intrinsic(all), HullOptions{std::numeric_limits<std::size_t>::max(), 64});
  std::vector<LabeledPoint> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (h.is_vertex[i]) kept.push_back(all.vertices()[i]);
  }
  return VPolytope(dim, std::move(kept));
}

VPolytope intrinsic(const VPolytope& p) {
  if (p.full_dimensional()) return p;
  if (p.affine_dim() < 0) return VPolytope(0, {});
  Matrix diffs;
  for (std::size_t i = 1; i < p.size(); ++i) diffs.push_back(p.point(i) - p.point(0));
  const Echelon e = echelon(diffs, p.dim());
  std::vector<LabeledPoint> pts;
  for (const auto& v : p.vertices()) {
    Vector x;
    for (auto c : e.pivots) x.push_back(v.point[c]);
    pts.push_back({v.label, std::move(x)});
  }
  return VPolytope(e.pivots.size(), std::move(pts));
}

bool same_point_set(const VPolytope& a, const VPolytope& b) {
  if (a.dim() != b.dim() || a.size() != b.size()) return false;
  auto pa = a.points();
  auto pb = b.points();
  std::sort(pa.begin(), pa.end(), lex_less);
  std::sort(pb.begin(), pb.end(), lex_less);
  return pa == pb;
}

std::vector<Edge> edges_from_incidence(const IncidenceMatrix& inc) {
  const std::size_t n = inc.num_vertices();
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      VertexSet meet = VertexSet::full(n);
      bool any = false;
      for (const auto& f : inc.facets) {
        if (f.test(u) && f.test(v)) {
          meet &= f;
          any = true;
        }
      }
      if (any && meet.count() == 2) edges.emplace_back(u, v);
    }
  }
  return edges;
}

GeometricGraph skeleton(const VPolytope& p) {
  const Hull h = convex_hull(p);
  const auto bad = h.redundant_labels();
  if (!bad.empty()) throw PreconditionError("point '" + bad.front() + "' is not a vertex of the hull");
  return GeometricGraph(p.vertices(), edges_from_incidence(h.incidence));
}

VPolytope cross_section(const VPolytope& p, const Hyperplane& h) {
  if (h.normal.size() != p.dim() || is_zero(h.normal)) throw PreconditionError("invalid slicing hyperplane");
  std::vector<Scalar> value(p.size());
  bool below = false, above = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    value[i] = h.evaluate(p.point(i));
    if (sgn(value[i]) == 0) throw PreconditionError("vertex '" + p.label(i) + "' lies on the slicing hyperplane");
    (sgn(value[i]) < 0 ? below : above) = true;
  }
  if (!below || !above) throw PreconditionError("hyperplane does not meet the polytope");

  const GeometricGraph g = skeleton(p);
  std::vector<LabeledPoint> pts;
  for (auto [u, v] : g.edges()) {
    if (sgn(value[u]) == sgn(value[v])) continue;
    const Scalar t = value[u] / (value[u] - value[v]);
    pts.push_back({p.label(u) + "~" + p.label(v), p.point(u) + t * (p.point(v) - p.point(u))});
  }
  return VPolytope(p.dim(), std::move(pts));
}

VPolytope projective_map(const VPolytope& p, const Matrix& A, const Vector& b, const Vector& c,
                         const Scalar& delta) {
  const std::size_t d = p.dim();
  if (A.size() != d || b.size() != d || c.size() != d) throw PreconditionError("projective map dimension mismatch");
  Matrix hom;
  for (std::size_t i = 0; i < d; ++i) {
    if (A[i].size() != d) throw PreconditionError("projective map dimension mismatch");
    Vector row = A[i];
    row.push_back(b[i]);
    hom.push_back(std::move(row));
  }
  Vector last = c;
  last.push_back(delta);
  hom.push_back(std::move(last));
  if (rank(hom, d + 1) != d + 1) throw PreconditionError("projective map is singular");

  std::vector<LabeledPoint> pts;
  for (const auto& v : p.vertices()) {
    const Scalar den = dot(c, v.point) + delta;
    if (sgn(den) <= 0) {
      throw PreconditionError("projective map not admissible: c.v + delta <= 0 at '" + v.label + "'");
    }
    Vector x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = (dot(A[i], v.point) + b[i]) / den;
    pts.push_back({v.label, std::move(x)});
  }
  VPolytope image(d, std::move(pts));
  if (p.full_dimensional()) {
    const Hull before = convex_hull(p);
    const Hull after = convex_hull(image);
    if (before.is_vertex != after.is_vertex || facet_label_sets(before) != facet_label_sets(after)) {
      throw InternalError("projective image is not combinatorially equivalent to its source");
    }
  }
  return image;
}

}  // namespace polyforge
