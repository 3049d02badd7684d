#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "polyforge/equiv.hpp"
#include "polyforge/error.hpp"
#include "polyforge/families.hpp"
#include "polyforge/hull.hpp"

using namespace polyforge;

namespace {

ConstructionParams dim(std::size_t d) {
  ConstructionParams p;
  p.d = d;
  return p;
}

std::size_t facet_index(const VPolytope& p, const std::set<std::string>& labels) {
  const Hull h = convex_hull(p);
  for (std::size_t f = 0; f < h.incidence.facets.size(); ++f) {
    std::set<std::string> on;
    for (auto v : h.incidence.facets[f].indices()) on.insert(p.label(v));
    if (on == labels) return f;
  }
  FAIL("no facet with the requested vertex set");
  return 0;
}

VPolytope segment(const Vector& a, const Vector& b) { return VPolytope(a.size(), {{"s0", a}, {"s1", b}}); }

}  // namespace

TEST_CASE("P(4) coordinates") {
  const VPolytope p = build_family(FamilyId::P, dim(4));
  CHECK(p.size() == 12);
  CHECK(p.point("A") == Vector{0, 0, 1, 1});
  CHECK(p.point("B") == Vector{0, 1, 0, 1});
  CHECK(p.point("C") == Vector{0, 0, 2, 1});
  CHECK(p.point("D") == Vector{0, 1, 3, 1});
  CHECK(p.point("A1") == Vector{1, 0, 0, 0});
  CHECK(p.point("A2") == Vector{0, 0, 0, 0});
  CHECK(p.point("D1") == Vector{1, 1, 3, 0});
}

TEST_CASE("P'(4, 1/10) perturbed coordinates") {
  const VPolytope p = build_family(FamilyId::Pprime, dim(4));
  CHECK(p.point("C'") == Vector{0, Scalar(-1, 10), Scalar(19, 10), 1});
  CHECK(p.point("C1'") == Vector{1, Scalar(-1, 3), 3, 0});
  CHECK(p.point("C2'") == Vector{0, Scalar(-1, 3), 3, 0});
  CHECK_FALSE(p.find("C").has_value());
}

TEST_CASE("P(3) has as many facets as vertices") {
  const VPolytope p = build_family(FamilyId::P, dim(3));
  CHECK(p.size() == 8);
  CHECK(convex_hull(p).polytope.facets.size() == 8);
}

TEST_CASE("vertex and facet counts across dimensions") {
  for (std::size_t d = 3; d <= 6; ++d) {
    CAPTURE(d);
    for (auto f : {FamilyId::P, FamilyId::Pprime, FamilyId::BarP, FamilyId::BarPprime}) {
      const VPolytope p = build_family(f, dim(d));
      CHECK(p.size() == 4 * d - 4);
      CHECK(redundant_points(p).empty());
      CHECK(convex_hull(p).polytope.facets.size() == d + 5);
    }
    for (auto f : {FamilyId::Q, FamilyId::Qprime}) CHECK(build_family(f, dim(d)).size() == 4 * d - 4);
    for (auto f : {FamilyId::StackedQ, FamilyId::StackedQprime}) CHECK(build_family(f, dim(d)).size() == 4 * d - 2);
  }
}

TEST_CASE("construction parameter errors") {
  CHECK_THROWS_AS(build_family(FamilyId::P, dim(2)), PreconditionError);
  ConstructionParams bad = dim(4);
  bad.eps = 0;
  CHECK_THROWS_AS(build_family(FamilyId::Pprime, bad), PreconditionError);
  bad.eps = 1;
  CHECK_THROWS_AS(build_family(FamilyId::Pprime, bad), PreconditionError);
  bad.eps = 3;
  CHECK_THROWS_AS(build_family(FamilyId::BarPprime, bad), PreconditionError);
  CHECK_THROWS_AS(parse_family_id("Nope"), ParseError);
  CHECK(parse_family_id("StackedQprime") == FamilyId::StackedQprime);
  CHECK(unperturbed_partner(FamilyId::BarPprime) == FamilyId::BarP);
}

TEST_CASE("stacking a pyramid") {
  SUBCASE("simplex facet of P(4)") {
    const VPolytope p = build_family(FamilyId::P, dim(4));
    const VPolytope s = stack_pyramid(p, facet_index(p, {"C1", "C2", "C", "D"}), 1);
    CHECK(s.size() == 13);
    CHECK(convex_hull(s).polytope.facets.size() == 12);
  }
  SUBCASE("square facet of the 3-cube") {
    const VPolytope c = cube(3);
    const VPolytope s = stack_pyramid(c, 0, 1);
    CHECK(s.size() == 9);
    CHECK(convex_hull(s).polytope.facets.size() == 9);
    CHECK(oracle::brute_force_facets(s.points()).size() == 9);
  }
  CHECK_THROWS_AS(stack_pyramid(cube(3), 6, 1), PreconditionError);
}

TEST_CASE("Minkowski sums") {
  const VPolytope c = cube(3);
  const Vector t{1, 2, 3};
  const VPolytope moved = minkowski_sum(c, VPolytope(3, {{"t", t}}));
  REQUIRE(moved.size() == 8);
  const auto pts = moved.points();
  for (std::size_t v = 0; v < c.size(); ++v) CHECK(std::find(pts.begin(), pts.end(), c.point(v) + t) != pts.end());

  const VPolytope sq = minkowski_sum(segment({0, 0}, {1, 0}), segment({0, 0}, {0, 1}));
  CHECK(same_point_set(sq, VPolytope(2, {{"a", {0, 0}}, {"b", {1, 0}}, {"c", {1, 1}}, {"d", {0, 1}}})));
}

TEST_CASE("Minkowski sum vertices match the oracle on all pairwise sums") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    const VPolytope p = random_polytope(rng, 3, 5 + rng() % 3);
    const VPolytope q = random_polytope(rng, 3, 4 + rng() % 3);
    std::vector<Vector> sums;
    for (const auto& x : p.points()) {
      for (const auto& y : q.points()) sums.push_back(x + y);
    }
    const auto keep = oracle::brute_force_vertices(sums);
    std::set<Vector, decltype(&lex_less)> want(&lex_less), got(&lex_less);
    for (std::size_t i = 0; i < sums.size(); ++i) {
      if (keep[i]) want.insert(sums[i]);
    }
    for (const auto& x : minkowski_sum(p, q).points()) got.insert(x);
    CHECK(got == want);
    CHECK(minkowski_sum_equals(p, q, minkowski_sum(p, q)));
  }
}

TEST_CASE("segment sums") {
  const VPolytope box = segment_sum(cube(3), unit_vector(3, 0), 1);
  CHECK(box.size() == 8);
  CHECK(combinatorially_equivalent(box, cube(3)).has_value());

  const VPolytope tri(2, {{"a", {0, 0}}, {"b", {2, 0}}, {"c", {0, 2}}});
  for (const Vector& a : {Vector{1, 1}, Vector{1, -3}, Vector{-1, 0}, Vector{1, 0}}) {
    const VPolytope s = segment_sum(tri, a, 1);
    CHECK(s.size() <= 6);
    std::vector<Vector> all;
    for (const auto& x : tri.points()) {
      all.push_back(x);
      all.push_back(x + a);
    }
    const auto keep = oracle::brute_force_vertices(all);
    CHECK(s.size() == static_cast<std::size_t>(std::count(keep.begin(), keep.end(), true)));
  }

  const VPolytope p = build_family(FamilyId::P, dim(4));
  const Vector a{1, 2, -1, 1};
  CHECK(combinatorially_equivalent(segment_sum(p, a, 1), segment_sum(p, a, 5)).has_value());
}

TEST_CASE("segment summand check") {
  const VPolytope p = build_family(FamilyId::P, dim(4));
  const auto s = segment_summand_check(p, unit_vector(4, 2));
  REQUIRE(s.has_value());
  CHECK(sgn(s->mu) > 0);
  CHECK(s->core.size() < 12);
  CHECK(minkowski_sum_equals(s->core, segment(zero_vector(4), s->mu * unit_vector(4, 2)), p));

  for (std::size_t j = 0; j < 3; ++j) CHECK_FALSE(segment_summand_check(standard_simplex(3), unit_vector(3, j)));

  const VPolytope sq(2, {{"a", {0, 0}}, {"b", {1, 0}}, {"c", {1, 1}}, {"d", {0, 1}}});
  const auto e1 = segment_summand_check(sq, {1, 0});
  REQUIRE(e1.has_value());
  CHECK(e1->mu == 1);
  CHECK(same_point_set(e1->core, segment({0, 0}, {0, 1})));
}

TEST_CASE("segment summand of the bar family reconstructs it") {
  const VPolytope p = build_family(FamilyId::BarP, dim(4));
  const auto s = segment_summand_check(p, unit_vector(4, 2));
  REQUIRE(s.has_value());
  const VPolytope sum = minkowski_sum(s->core, segment(zero_vector(4), s->mu * unit_vector(4, 2)));
  CHECK(same_point_set(sum, p));
}

TEST_CASE("a segment added is a segment found") {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + rng() % 2;
    const VPolytope p = random_polytope(rng, d, d + 2 + rng() % 4);
    Vector a(d);
    do {
      for (auto& x : a) x = static_cast<long>(rng() % 5) - 2;
    } while (is_zero(a));
    const VPolytope s = segment_sum(p, a, 1);
    const auto found = segment_summand_check(s, a);
    REQUIRE(found.has_value());
    CHECK(found->mu >= 1);
    CHECK(minkowski_sum_equals(found->core, segment(zero_vector(d), found->mu * a), s));
  }
}

TEST_CASE("random polytopes are reproducible") {
  std::mt19937_64 a(99), b(99);
  const VPolytope p = random_polytope(a, 3, 8);
  const VPolytope q = random_polytope(b, 3, 8);
  CHECK(p.vertices().size() == q.vertices().size());
  CHECK(same_point_set(p, q));
  CHECK(p.full_dimensional());
}

TEST_CASE("convex-combination identities for non-edges of P'") {
  // Informational only: reports whether each stated combination evaluates
  // to the midpoint for a few eps values.
  for (const Scalar eps : {Scalar(1, 10), Scalar(1, 20)}) {
    ConstructionParams params = dim(4);
    params.eps = eps;
    const VPolytope p = build_family(FamilyId::Pprime, params);
    const Scalar one(1);
    const Scalar e2 = 2 * eps;
    auto pt = [&](const char* l) { return p.point(l); };

    const Vector lhs1 = Scalar(1, 2) * pt("B1") + Scalar(1, 2) * pt("C'");
    const Vector rhs1 = Scalar((2 + eps) / 6) * pt("B1") + Scalar(1, 2) * pt("A") +
                        Scalar((one - eps) * (one - eps) / (6 * (one + e2))) * pt("D1") +
                        Scalar(eps * (one - eps) / (2 * (one + e2))) * pt("C1'");
    const Vector lhs2 = Scalar(1, 2) * pt("D1") + Scalar(1, 2) * pt("C'");
    const Vector rhs2 = Scalar((one + eps) / 6) * pt("A1") + Scalar((one - eps * eps) / (3 * (one + e2))) * pt("C1'") +
                        Scalar(eps / (2 * (one + e2))) * pt("D1") + Scalar(1, 2) * pt("D");
    const Vector lhs3 = Scalar(1, 2) * pt("B") + Scalar(1, 2) * pt("C1'");
    const Vector rhs3 = Scalar((2 - 5 * eps) / (4 * (one - eps))) * pt("A1") +
                        Scalar(9 * eps / (4 * (one - eps * eps))) * pt("C1'") +
                        Scalar((2 - 2 * eps * eps - 9 * eps) / (4 * (one - eps * eps))) * pt("D") +
                        Scalar(3 * eps / (4 * (one - eps))) * pt("D1");
    MESSAGE("eps=" << eps << " B1/C': " << (lhs1 == rhs1) << " D1/C': " << (lhs2 == rhs2)
                   << " B/C1': " << (lhs3 == rhs3));
  }
}
