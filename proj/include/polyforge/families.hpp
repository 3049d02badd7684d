#pragma once

// Parametric polytope families with a segment summand, their perturbed
// indecomposable partners, and the gluing / sum operations that extend them.
//
// Coordinates are 1-based in the comments below (e_1 .. e_d). Base vertices:
//   A_i = e_i (i <= d-3), A_{d-2} = 0, B_i = A_i + e_{d-2},
//   C_i = A_i + 3 e_{d-1}, D_i = A_i + e_{d-2} + 3 e_{d-1}.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "polyforge/polytope.hpp"

namespace polyforge {

enum class FamilyId { P, Pprime, BarP, BarPprime, Q, Qprime, DeltaBase, StackedQ, StackedQprime };

FamilyId parse_family_id(std::string_view name);
std::string to_string(FamilyId id);
bool is_perturbed(FamilyId id);
/// The unperturbed partner of a perturbed family (Pprime -> P, ...).
FamilyId unperturbed_partner(FamilyId id);

struct ConstructionParams {
  std::size_t d = 4;
  Scalar eps = Scalar(1, 10);
  Scalar stack_height = 1;
  /// Check perturbed families against their partner for combinatorial
  /// equivalence and reject eps if it fails.
  bool validate_eps = true;
};

/// Labelled vertex list of a family member. Every family except DeltaBase is
/// full-dimensional in Q^d. Throws PreconditionError for d below the family
/// minimum (3) or an eps the construction cannot use.
VPolytope build_family(FamilyId family, const ConstructionParams& params);

/// conv(p + apex) with apex = centroid(facet) + h * outward primitive normal.
/// h is halved (up to 64 times) until the apex is beyond only this facet.
/// `facet_index` refers to the sorted facet order of convex_hull(p).
VPolytope stack_pyramid(const VPolytope& p, std::size_t facet_index, const Scalar& h,
                        const std::string& apex_label = "Apex");

/// Vertices of {x + y}; labels "x+y". Inputs need not be full-dimensional.
VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);

/// True iff conv(q) + conv(r) == conv(p) as point sets. p must be
/// full-dimensional.
bool minkowski_sum_equals(const VPolytope& q, const VPolytope& r, const VPolytope& p);

/// p + [0, k a]. The copy at the origin end keeps p's labels, the far copy
/// gets the suffix "+a".
VPolytope segment_sum(const VPolytope& p, const Vector& a, const Scalar& k);

struct SegmentSummand {
  Scalar mu;        // p = core + [0, mu u]
  VPolytope core;
};

/// Largest mu > 0 (among vertex-difference candidates) with
/// p = (p intersect (p - mu u)) + [0, mu u], or nullopt.
std::optional<SegmentSummand> segment_summand_check(const VPolytope& p, const Vector& u);

// Standard shapes used throughout the tests and corpus.
VPolytope standard_simplex(std::size_t d);
VPolytope cube(std::size_t d);
/// (d-1)-simplex times a segment, full-dimensional in Q^d.
VPolytope simplex_prism(std::size_t d);
VPolytope cross_polytope(std::size_t d);

/// Hull of `points` random rationals p/q (|p| <= 6, 1 <= q <= 3), redrawn
/// until full-dimensional. Labels "r0", "r1", ... in input order.
VPolytope random_polytope(std::mt19937_64& rng, std::size_t d, std::size_t points);

}  // namespace polyforge
