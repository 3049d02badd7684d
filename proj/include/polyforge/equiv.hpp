#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyforge/polytope.hpp"

namespace polyforge {

/// Vertex and facet bijections carrying one incidence matrix onto another.
/// Facet indices refer to the sorted facet order of convex_hull().
struct LatticeIsomorphism {
  std::vector<std::pair<std::string, std::string>> vertex_map;
  std::vector<std::pair<std::size_t, std::size_t>> facet_map;

  /// Image of a source label; throws PreconditionError for unknown labels.
  const std::string& image(std::string_view label) const;
  LatticeIsomorphism inverse() const;
};

/// Label with trailing primes removed ("C1'" -> "C1"). Candidate targets whose
/// base label equals the source's are tried first during the search.
std::string base_label(std::string_view label);

/// Vertex permutation perm with a.facets mapped onto b.facets, or nullopt.
/// Backtracking over vertex images with colour refinement on the bipartite
/// vertex/facet incidence graph.
std::optional<std::vector<std::size_t>> incidence_isomorphism(const IncidenceMatrix& a, const IncidenceMatrix& b);

/// Face-lattice isomorphism between conv(p1) and conv(p2). Lower-dimensional
/// inputs are compared in their own affine hulls.
std::optional<LatticeIsomorphism> combinatorially_equivalent(const VPolytope& p1, const VPolytope& p2);

struct HomothetyWitness {
  Scalar ratio;
  Vector shift;
};

/// lambda > 0 and t with vertices(p2) = lambda * vertices(p1) + t.
std::optional<HomothetyWitness> homothetic(const VPolytope& p1, const VPolytope& p2);

struct Lemma1Report {
  bool passed = false;
  std::size_t vertices = 0;
  std::size_t near_facets = 0;   // F, all vertices at the origin end
  std::size_t far_facets = 0;    // F + a versus F + k a
  std::size_t side_facets = 0;   // F + [0, a] versus F + [0, k a]
  std::vector<std::string> failures;
};

/// Checks that p + [0, a] and p + [0, k a] are combinatorially equivalent,
/// both by search and through the explicit vertex/facet correspondence.
Lemma1Report verify_lemma1(const VPolytope& p, const Vector& a, const Scalar& k);

}  // namespace polyforge
