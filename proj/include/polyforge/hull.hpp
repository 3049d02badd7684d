#pragma once

// Vertex/facet conversion, face lattices, edge graphs, slicing and
// projective maps for full-dimensional polytopes with exact coordinates.

#include <cstddef>
#include <string>
#include <vector>

#include "polyforge/polytope.hpp"

namespace polyforge {

struct HullOptions {
  std::size_t max_vertices = 64;
  std::size_t max_dim = 8;
};

struct Hull {
  HPolytope polytope;
  /// Rows follow the input point order, redundant points included.
  IncidenceMatrix incidence;
  /// is_vertex[i] is false for points that are not vertices of the hull
  /// (convex combinations of others, or repeats of an earlier point).
  std::vector<bool> is_vertex;

  std::vector<std::string> redundant_labels() const;
};

/// Facets of a full-dimensional point set, sorted by canonical hyperplane.
/// Throws PreconditionError when the input is not full-dimensional or is
/// over the size limits.
Hull convex_hull(const VPolytope& p, const HullOptions& options = {});

/// Vertices of the bounded polyhedron { x : h.normal . x >= h.offset },
/// sorted lexicographically. Returns an empty list for an empty polyhedron.
std::vector<Vector> vertices_from_inequalities(const std::vector<Hyperplane>& halfspaces, std::size_t dim);

/// Labels of points that are not vertices of conv(p).
std::vector<std::string> redundant_points(const VPolytope& p);
/// Throws PreconditionError naming the first redundant point.
void require_irredundant(const VPolytope& p);

/// conv(points) with redundant points dropped (the first occurrence of a
/// repeated point is kept). Works for any affine dimension.
VPolytope hull_vertices(std::size_t dim, std::vector<LabeledPoint> points);

/// Coordinate projection onto a subset of axes that is injective on aff(p),
/// giving a full-dimensional copy of p with the same labels.
VPolytope intrinsic(const VPolytope& p);

/// True iff both vertex sets agree as point sets (labels ignored).
bool same_point_set(const VPolytope& a, const VPolytope& b);

FaceLattice face_lattice(const IncidenceMatrix& inc);

/// Edges of the polytope: rank-1 faces of the lattice.
GeometricGraph edge_graph(const FaceLattice& lattice, const VPolytope& p);
/// Edges by the facet-intersection test: {u,v} is an edge iff the facets
/// containing both meet exactly in {u,v}.
std::vector<Edge> edges_from_incidence(const IncidenceMatrix& inc);
/// 1-skeleton of a full-dimensional irredundant polytope.
GeometricGraph skeleton(const VPolytope& p);

/// Intersection with a hyperplane that avoids every vertex. Section vertices
/// are labelled "u~v" after the crossed edge and stay embedded in Q^d.
VPolytope cross_section(const VPolytope& p, const Hyperplane& h);

/// v -> (A v + b) / (c . v + delta). Requires c . v + delta > 0 on every
/// vertex and an invertible homogeneous matrix [[A, b], [c, delta]].
VPolytope projective_map(const VPolytope& p, const Matrix& A, const Vector& b, const Vector& c,
                         const Scalar& delta);

}  // namespace polyforge
