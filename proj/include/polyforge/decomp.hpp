#pragma once

// Exact Minkowski decomposability: the summand space of a geometric graph,
// explicit summand extraction, triangular chains and indecomposability
// certificates, plus a step-by-step check of the segment-summand theorem on
// concrete polytopes.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyforge/error.hpp"
#include "polyforge/polytope.hpp"

namespace polyforge {

/// Fields f: V -> Q^d with f(u) - f(v) parallel to u - v on every edge.
/// basis[i][v] is the displacement of vertex v (in `labels` order).
struct SummandSpace {
  std::size_t ambient_dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Vector>> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// Edge-parallelism constraints, d - 1 rows per edge, over the n*d unknowns
/// f(v)_j (index v*d + j).
Matrix summand_constraints(const GeometricGraph& g, std::size_t d);

/// Throws PreconditionError for a disconnected graph or a degenerate edge.
SummandSpace summand_space(const GeometricGraph& g, std::size_t d);

struct DecompositionVerdict {
  bool decomposable = false;
  SummandSpace space;
};

DecompositionVerdict is_decomposable(const VPolytope& p);

struct SummandPair {
  VPolytope q;
  VPolytope r;
};

/// q + r = p with neither summand homothetic to p. Throws PreconditionError
/// for indecomposable input and InternalError if the exact reconstruction
/// check fails.
SummandPair extract_summands(const VPolytope& p);

struct TriangularChain {
  std::vector<std::array<std::string, 3>> triangles;

  std::vector<std::string> vertex_labels() const;  // sorted, unique
};

enum class ChainMode { CoverVertices, TouchFacets };

/// Chain invariants (triangles of g, consecutive triangles sharing exactly an
/// edge) plus the mode's coverage condition. `inc` is only read in
/// TouchFacets mode and must carry g's labels. Throws PreconditionError for
/// labels missing from g.
bool verify_triangular_chain(const GeometricGraph& g, const TriangularChain& chain, ChainMode mode,
                             const IncidenceMatrix& inc);

/// Depth-first walk over edge-adjacent triangles, children ordered by
/// coverage gain. nullopt when no chain is found within `budget` expansions.
std::optional<TriangularChain> find_triangular_chain(const GeometricGraph& g, ChainMode mode,
                                                     const IncidenceMatrix& inc, std::size_t budget = 1000000);

/// Maximal families of edge-adjacent triangles, each walked as one chain.
std::vector<TriangularChain> triangle_components(const GeometricGraph& g, std::size_t budget = 1000000);

enum class CertificateKind { ChainCoversVertices, SubgraphTouchesFacets, SkewGluing, RankWitness, SummandPair };

std::string to_string(CertificateKind kind);
CertificateKind parse_certificate_kind(const std::string& name);

using LabelEdge = std::pair<std::string, std::string>;

struct Certificate {
  CertificateKind kind = CertificateKind::RankWitness;
  // ChainCoversVertices, SubgraphTouchesFacets
  TriangularChain chain;
  // SubgraphTouchesFacets: facet index -> a chain vertex on it
  std::vector<std::pair<std::size_t, std::string>> touches;
  // SkewGluing: chains certifying the two pieces, connectors [a_i, b_i]
  std::vector<TriangularChain> pieces;
  std::vector<LabelEdge> connectors;
  // RankWitness
  SummandSpace space;
  // SummandPair
  std::optional<SummandPair> summands;

  /// True for the kinds that assert indecomposability.
  bool asserts_indecomposable() const { return kind != CertificateKind::SummandPair; }
};

struct CheckResult {
  bool valid = false;
  std::string reason;

  explicit operator bool() const { return valid; }
};

/// Two chain-certified disjoint subgraphs of g joined by disjoint edges
/// e1 = [a1, b1], e2 = [a2, b2] (a_i in the first piece, b_i in the second)
/// on skew lines.
CheckResult verify_skew_gluing(const TriangularChain& a, const TriangularChain& b, const LabelEdge& e1,
                               const LabelEdge& e2, const GeometricGraph& g);

/// Standalone check of a certificate against p.
CheckResult verify_certificate(const Certificate& cert, const VPolytope& p);

class DecomposableInput : public Error {
 public:
  explicit DecomposableInput(SummandSpace space);
  const SummandSpace& space() const { return space_; }

 private:
  SummandSpace space_;
};

/// Tries, in order: vertex-covering chain (fewer than 2d vertices),
/// facet-touching chain, skew gluing of two triangle components, rank
/// witness. Throws DecomposableInput when p is decomposable.
Certificate certify_indecomposable(const VPolytope& p, std::size_t budget = 1000000);

/// Certificate for either verdict: an indecomposability certificate or a
/// SummandPair.
Certificate certify(const VPolytope& p, std::size_t budget = 1000000);

struct TheoremStep {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct MainTheoremReport {
  bool precondition_failed = false;
  bool passed = false;
  std::vector<TheoremStep> steps;
};

/// Walks the proof that a d-polytope with at most 4d - 5 vertices and a
/// segment summand is not conditionally decomposable, checking each claim on p.
MainTheoremReport check_main_theorem_instance(const VPolytope& p, std::size_t budget = 1000000);

/// Projective map x -> (x + b) / (alpha . x - alpha . z) sending z to
/// infinity, where alpha . x >= c is a facet of p violated by z. Lines
/// through z become parallel. Throws PreconditionError if z is in p.
VPolytope normalize_concurrent_lines(const VPolytope& p, const Vector& z);

}  // namespace polyforge
