#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyforge/arith.hpp"
#include "polyforge/vertex_set.hpp"

namespace polyforge {

struct LabeledPoint {
  std::string label;
  Vector point;
};

/// A finite labeled point set in Q^dim, read as the vertex list of its convex
/// hull. Labels are unique and every point has length dim; irredundancy is
/// checked separately by require_irredundant().
class VPolytope {
 public:
  VPolytope() = default;
  VPolytope(std::size_t dim, std::vector<LabeledPoint> vertices);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vertices_.size(); }
  int affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == static_cast<int>(dim_); }

  const std::vector<LabeledPoint>& vertices() const { return vertices_; }
  const std::string& label(std::size_t i) const { return vertices_[i].label; }
  const Vector& point(std::size_t i) const { return vertices_[i].point; }
  std::vector<Vector> points() const;
  std::vector<std::string> labels() const;

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws PreconditionError for an unknown label.
  std::size_t index_of(std::string_view label) const;
  const Vector& point(std::string_view label) const { return point(index_of(label)); }

 private:
  std::size_t dim_ = 0;
  int affine_dim_ = -1;
  std::vector<LabeledPoint> vertices_;
};

/// Inward-oriented facet inequalities.
struct HPolytope {
  std::size_t dim = 0;
  std::vector<Hyperplane> facets;
};

/// Vertex-facet incidences. Rows are vertices (by label), columns are facets,
/// stored column-wise as vertex sets.
struct IncidenceMatrix {
  std::size_t dim = 0;
  std::vector<std::string> vertex_labels;
  std::vector<VertexSet> facets;

  std::size_t num_vertices() const { return vertex_labels.size(); }
  std::size_t num_facets() const { return facets.size(); }
  bool incident(std::size_t vertex, std::size_t facet) const { return facets[facet].test(vertex); }
  /// Facets containing every vertex of `s`.
  std::vector<std::size_t> facets_containing(const VertexSet& s) const;
};

struct Face {
  int rank = -1;
  VertexSet vertices;
};

/// All faces of a polytope, sorted by (rank, vertex set). Includes the empty
/// face (rank -1) and the polytope itself (rank dim).
struct FaceLattice {
  std::size_t dim = 0;
  std::vector<std::string> vertex_labels;
  std::vector<Face> faces;

  /// f_0 .. f_{dim-1}.
  std::vector<std::size_t> f_vector() const;
  std::vector<VertexSet> faces_of_rank(int rank) const;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Points with straight edges between some pairs.
class GeometricGraph {
 public:
  GeometricGraph() = default;
  GeometricGraph(std::vector<LabeledPoint> nodes, std::vector<Edge> edges);

  std::size_t size() const { return nodes_.size(); }
  std::size_t dim() const { return nodes_.empty() ? 0 : nodes_.front().point.size(); }
  const std::vector<LabeledPoint>& nodes() const { return nodes_; }
  const std::string& label(std::size_t i) const { return nodes_[i].label; }
  const Vector& point(std::size_t i) const { return nodes_[i].point; }
  /// Sorted, each edge as (i, j) with i < j.
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexSet& neighbors(std::size_t i) const { return adjacency_[i]; }
  bool has_edge(std::size_t i, std::size_t j) const { return adjacency_[i].test(j); }
  bool has_edge(std::string_view a, std::string_view b) const;

  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;

  bool connected() const;
  /// Subgraph induced on `keep`; node order preserved.
  GeometricGraph induced(const VertexSet& keep) const;

 private:
  std::vector<LabeledPoint> nodes_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
};

}  // namespace polyforge
