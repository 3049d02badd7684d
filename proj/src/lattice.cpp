#include <algorithm>
#include <deque>
#include <unordered_set>

#include "polyforge/error.hpp"
#include "polyforge/hull.hpp"

namespace polyforge {

FaceLattice face_lattice(const IncidenceMatrix& inc) {
  const std::size_t n = inc.num_vertices();
  const std::size_t d = inc.dim;
  for (std::size_t f = 0; f < inc.num_facets(); ++f) {
    if (inc.facets[f].size() != n) throw PreconditionError("incidence column has the wrong length");
    if (inc.facets[f].count() < d) {
      throw PreconditionError("inconsistent incidence: facet " + std::to_string(f) + " has fewer than d vertices");
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t on = 0;
    for (const auto& f : inc.facets) on += f.test(v) ? 1 : 0;
    if (on < d) {
      throw PreconditionError("inconsistent incidence: vertex '" + inc.vertex_labels[v] + "' lies on fewer than d facets");
    }
  }

  // Every face is an intersection of facets; close the facet family under
  // intersection.
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::deque<VertexSet> queue;
  seen.insert(VertexSet::full(n));
  seen.insert(VertexSet(n));
  for (const auto& f : inc.facets) {
    if (seen.insert(f).second) queue.push_back(f);
  }
  while (!queue.empty()) {
    const VertexSet x = queue.front();
    queue.pop_front();
    for (const auto& f : inc.facets) {
      VertexSet y = x & f;
      if (y != x && seen.insert(y).second) queue.push_back(std::move(y));
    }
  }

  std::vector<VertexSet> sets(seen.begin(), seen.end());
  std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
    const auto ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<int> rank(sets.size(), -1);
  for (std::size_t i = 1; i < sets.size(); ++i) {
    int r = -1;
    for (std::size_t j = 0; j < i; ++j) {
      if (rank[j] >= r && sets[j] != sets[i] && sets[j].is_subset_of(sets[i])) r = rank[j];
    }
    rank[i] = r + 1;
  }

  FaceLattice lattice;
  lattice.dim = d;
  lattice.vertex_labels = inc.vertex_labels;
  for (std::size_t i = 0; i < sets.size(); ++i) lattice.faces.push_back(Face{rank[i], sets[i]});
  std::sort(lattice.faces.begin(), lattice.faces.end(), [](const Face& a, const Face& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.vertices < b.vertices;
  });

  // Structural checks: graded, diamond property at ridges, Euler relation.
  if (lattice.faces.back().rank != static_cast<int>(d)) {
    throw PreconditionError("inconsistent incidence: lattice has rank " + std::to_string(lattice.faces.back().rank));
  }
  std::size_t singletons = 0;
  for (const auto& face : lattice.faces) {
    if (face.rank == 0) {
      if (face.vertices.count() != 1) throw PreconditionError("inconsistent incidence: rank-0 face is not a vertex");
      ++singletons;
    }
    if (face.rank == static_cast<int>(d) - 1 &&
        std::find(inc.facets.begin(), inc.facets.end(), face.vertices) == inc.facets.end()) {
      throw PreconditionError("inconsistent incidence: facet is contained in another facet");
    }
    if (face.rank == static_cast<int>(d) - 2 && inc.facets_containing(face.vertices).size() != 2) {
      throw PreconditionError("inconsistent incidence: ridge not contained in exactly two facets");
    }
  }
  if (singletons != n) throw PreconditionError("inconsistent incidence: not every row is a vertex");
  long euler = 0;
  const auto f = lattice.f_vector();
  for (std::size_t i = 0; i < f.size(); ++i) euler += (i % 2 == 0 ? 1 : -1) * static_cast<long>(f[i]);
  if (euler != (d % 2 == 0 ? 0 : 2)) throw PreconditionError("inconsistent incidence: Euler relation fails");
  return lattice;
}

GeometricGraph edge_graph(const FaceLattice& lattice, const VPolytope& p) {
  if (lattice.vertex_labels != p.labels()) throw PreconditionError("lattice and polytope labels differ");
  std::vector<Edge> edges;
  for (const auto& e : lattice.faces_of_rank(1)) {
    const auto idx = e.indices();
    if (idx.size() != 2) throw PreconditionError("rank-1 face with " + std::to_string(idx.size()) + " vertices");
    edges.emplace_back(idx[0], idx[1]);
  }
  return GeometricGraph(p.vertices(), std::move(edges));
}

}  // namespace polyforge
