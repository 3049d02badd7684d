#include "polyforge/polytope.hpp"

#include <algorithm>
#include <set>

#include "polyforge/error.hpp"

namespace polyforge {

VPolytope::VPolytope(std::size_t dim, std::vector<LabeledPoint> vertices)
    : dim_(dim), vertices_(std::move(vertices)) {
  std::set<std::string_view> seen;
  for (const auto& v : vertices_) {
    if (v.point.size() != dim_) {
      throw PreconditionError("vertex '" + v.label + "' has " + std::to_string(v.point.size()) +
                              " coordinates, expected " + std::to_string(dim_));
    }
    if (v.label.empty()) throw PreconditionError("empty vertex label");
    if (!seen.insert(v.label).second) throw PreconditionError("duplicate vertex label '" + v.label + "'");
  }
  affine_dim_ = affine_dimension(points());
}

std::vector<Vector> VPolytope::points() const {
  std::vector<Vector> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.point);
  return out;
}

std::vector<std::string> VPolytope::labels() const {
  std::vector<std::string> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.label);
  return out;
}

std::optional<std::size_t> VPolytope::find(std::string_view label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t VPolytope::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw PreconditionError("unknown vertex label '" + std::string(label) + "'");
}

std::vector<std::size_t> IncidenceMatrix::facets_containing(const VertexSet& s) const {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    if (s.is_subset_of(facets[f])) out.push_back(f);
  }
  return out;
}

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> f(dim, 0);
  for (const auto& face : faces) {
    if (face.rank >= 0 && face.rank < static_cast<int>(dim)) ++f[static_cast<std::size_t>(face.rank)];
  }
  return f;
}

std::vector<VertexSet> FaceLattice::faces_of_rank(int rank) const {
  std::vector<VertexSet> out;
  for (const auto& face : faces) {
    if (face.rank == rank) out.push_back(face.vertices);
  }
  return out;
}

GeometricGraph::GeometricGraph(std::vector<LabeledPoint> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)) {
  std::set<std::string_view> seen;
  for (const auto& n : nodes_) {
    if (!seen.insert(n.label).second) throw PreconditionError("duplicate node label '" + n.label + "'");
  }
  adjacency_.assign(nodes_.size(), VertexSet(nodes_.size()));
  for (auto [a, b] : edges) {
    if (a >= nodes_.size() || b >= nodes_.size()) throw PreconditionError("edge endpoint out of range");
    if (a == b) throw PreconditionError("loop edge at '" + nodes_[a].label + "'");
    if (a > b) std::swap(a, b);
    adjacency_[a].set(b);
    adjacency_[b].set(a);
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (auto j : adjacency_[i].indices()) {
      if (i < j) edges_.emplace_back(i, j);
    }
  }
}

bool GeometricGraph::has_edge(std::string_view a, std::string_view b) const {
  return has_edge(index_of(a), index_of(b));
}

std::optional<std::size_t> GeometricGraph::find(std::string_view label) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t GeometricGraph::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw PreconditionError("unknown graph node '" + std::string(label) + "'");
}

bool GeometricGraph::connected() const {
  if (nodes_.empty()) return true;
  VertexSet seen(nodes_.size());
  std::vector<std::size_t> stack{0};
  seen.set(0);
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adjacency_[v].indices()) {
      if (!seen.test(w)) {
        seen.set(w);
        stack.push_back(w);
      }
    }
  }
  return seen.count() == nodes_.size();
}

GeometricGraph GeometricGraph::induced(const VertexSet& keep) const {
  std::vector<std::size_t> old_to_new(nodes_.size(), nodes_.size());
  std::vector<LabeledPoint> nodes;
  for (auto i : keep.indices()) {
    old_to_new[i] = nodes.size();
    nodes.push_back(nodes_[i]);
  }
  std::vector<Edge> edges;
  for (auto [a, b] : edges_) {
    if (keep.test(a) && keep.test(b)) edges.emplace_back(old_to_new[a], old_to_new[b]);
  }
  return GeometricGraph(std::move(nodes), std::move(edges));
}

}  // namespace polyforge
