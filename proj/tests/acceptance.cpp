// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every comparison is exact.

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polyforge/decomp.hpp"
#include "polyforge/equiv.hpp"
#include "polyforge/error.hpp"
#include "polyforge/families.hpp"
#include "polyforge/hull.hpp"

using namespace polyforge;

namespace {

using LabelSet = std::set<std::string>;

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

ConstructionParams params(std::size_t d, Scalar eps = Scalar(1, 10)) {
  ConstructionParams p;
  p.d = d;
  p.eps = eps;
  return p;
}

std::string num(std::size_t n) { return std::to_string(n); }

Vector e(std::size_t d, std::size_t k) { return unit_vector(d, k - 1); }

LabelSet labels_on(const VPolytope& p, const VertexSet& s) {
  LabelSet out;
  for (auto v : s.indices()) out.insert(p.label(v));
  return out;
}

// Canonical unoriented hyperplane -> incident labels, for every facet.
std::map<Hyperplane, LabelSet> facet_table(const VPolytope& p) {
  const Hull h = convex_hull(p);
  std::map<Hyperplane, LabelSet> out;
  for (std::size_t f = 0; f < h.polytope.facets.size(); ++f) {
    out[canonical_unoriented(h.polytope.facets[f])] = labels_on(p, h.incidence.facets[f]);
  }
  return out;
}

std::size_t find_facet(const VPolytope& p, const LabelSet& want) {
  const Hull h = convex_hull(p);
  for (std::size_t f = 0; f < h.incidence.facets.size(); ++f) {
    if (labels_on(p, h.incidence.facets[f]) == want) return f;
  }
  throw InternalError("no facet with the requested labels");
}

std::set<LabelSet> edge_set(const VPolytope& p) {
  const GeometricGraph g = skeleton(p);
  std::set<LabelSet> out;
  for (const auto& [a, b] : g.edges()) out.insert({g.label(a), g.label(b)});
  return out;
}

std::set<LabelSet> oracle_edge_set(const VPolytope& p) {
  const auto pts = p.points();
  std::set<LabelSet> out;
  for (std::size_t u = 0; u < pts.size(); ++u) {
    for (std::size_t v = u + 1; v < pts.size(); ++v) {
      if (oracle::projection_edge(pts, u, v)) out.insert({p.label(u), p.label(v)});
    }
  }
  return out;
}

bool isomorphism_renames_c(const LatticeIsomorphism& iso, const VPolytope& p) {
  for (const auto& l : p.labels()) {
    const std::string want = l.front() == 'C' ? l + "'" : l;
    if (iso.image(l) != want) return false;
  }
  return true;
}

// The facet families of P (or P' with the given eps), with the labels on each.
std::map<Hyperplane, LabelSet> expected_facets(std::size_t d, const std::optional<Scalar>& eps) {
  const std::size_t m = d - 2;
  const std::string prime = eps ? "'" : "";
  auto A = [](std::size_t i) { return "A" + num(i); };
  auto B = [](std::size_t i) { return "B" + num(i); };
  auto C = [&](std::size_t i) { return "C" + num(i) + prime; };
  auto D = [](std::size_t i) { return "D" + num(i); };
  const std::string a = "A", b = "B", c = "C" + prime, dd = "D";

  auto plane = [&](Vector n, Scalar offset) { return canonical_unoriented(Hyperplane{std::move(n), std::move(offset)}); };
  auto coord = [&](std::size_t k) { return e(d, k); };

  std::map<Hyperplane, LabelSet> out;
  LabelSet base;
  for (std::size_t i = 1; i <= m; ++i) base.insert({A(i), B(i), C(i), D(i)});
  out[plane(coord(d), 0)] = base;

  for (std::size_t j = 1; j + 3 <= d; ++j) {
    LabelSet s{a, b, c, dd};
    for (std::size_t i = 1; i <= m; ++i) {
      if (i != j) s.insert({A(i), B(i), C(i), D(i)});
    }
    out[plane(coord(j), 0)] = s;
  }

  Vector sum = coord(d);
  LabelSet s{a, b, c, dd};
  for (std::size_t i = 1; i + 3 <= d; ++i) {
    sum = sum + coord(i);
    s.insert({A(i), B(i), C(i), D(i)});
  }
  out[plane(sum, 1)] = s;

  LabelSet ac{a, c}, bd{b, dd}, ccd{c, dd}, aab{a, b}, cdd{dd}, abb{b};
  for (std::size_t i = 1; i <= m; ++i) {
    ac.insert({A(i), C(i)});
    bd.insert({B(i), D(i)});
    ccd.insert(C(i));
    aab.insert(A(i));
    cdd.insert({C(i), D(i)});
    abb.insert({A(i), B(i)});
  }
  if (eps) {
    const Scalar& t = *eps;
    out[plane(Scalar((t - 1) / t) * coord(d - 2) - coord(d - 1) + coord(d), 0)] = ac;
    out[plane(Scalar(t - 1) * coord(d - 2) + Scalar(1 - t) * coord(d - 1) + Scalar(2 * t + 1) * coord(d), 3)] = ccd;
  } else {
    out[plane(coord(d - 2), 0)] = ac;
    out[plane(-coord(d - 2) + coord(d - 1) + coord(d), 3)] = ccd;
  }
  out[plane(coord(d - 2), 1)] = bd;
  out[plane(coord(d - 2) + coord(d - 1) - coord(d), 0)] = aab;
  out[plane(coord(d - 1), 3)] = cdd;
  out[plane(coord(d - 1), 0)] = abb;
  return out;
}

void criterion_1(Check& c) {
  for (std::size_t d = 4; d <= 7; ++d) {
    for (bool perturbed : {false, true}) {
      const VPolytope p = build_family(perturbed ? FamilyId::Pprime : FamilyId::P, params(d));
      const std::string tag = std::string(perturbed ? "P'" : "P") + "(" + num(d) + ")";
      const Hull h = convex_hull(p);
      std::size_t vertices = 0;
      for (bool v : h.is_vertex) vertices += v;
      c.expect(vertices == 4 * d - 4, tag + ": vertex count " + num(vertices));
      c.expect(h.polytope.facets.size() == d + 5, tag + ": facet count " + num(h.polytope.facets.size()));
      const auto got = facet_table(p);
      const auto want = expected_facets(d, perturbed ? std::optional<Scalar>(Scalar(1, 10)) : std::nullopt);
      c.expect(want.size() == d + 5, tag + ": expected list has " + num(want.size()) + " entries");
      for (const auto& [plane, labels] : want) {
        auto it = got.find(plane);
        if (it == got.end()) {
          c.expect(false, tag + ": missing facet " + to_string(plane));
        } else {
          c.expect(it->second == labels, tag + ": wrong vertex set on " + to_string(plane));
        }
      }
      c.expect(got.size() == want.size(), tag + ": extra facets");
    }
  }
}

bool valid_summand_pair(const VPolytope& p, const SummandPair& s) {
  return minkowski_sum_equals(s.q, s.r, p) && !homothetic(s.q, p) && !homothetic(s.r, p);
}

std::set<LabelSet> connector_set(const Certificate& cert) {
  std::set<LabelSet> out;
  for (const auto& [a, b] : cert.connectors) out.insert({a, b});
  return out;
}

void criterion_2(Check& c) {
  for (std::size_t d = 4; d <= 6; ++d) {
    const std::string tag = "d=" + num(d);
    const VPolytope p = build_family(FamilyId::P, params(d));
    const VPolytope q = build_family(FamilyId::Pprime, params(d));
    const auto iso = combinatorially_equivalent(p, q);
    c.expect(iso && isomorphism_renames_c(*iso, p), tag + ": isomorphism does not rename exactly the C labels");
    c.expect(is_decomposable(p).decomposable, tag + ": P not decomposable");
    c.expect(valid_summand_pair(p, extract_summands(p)), tag + ": extracted summands do not reconstruct P");
    const Certificate cert = certify_indecomposable(q);
    c.expect(cert.kind == CertificateKind::SkewGluing, tag + ": certificate kind " + to_string(cert.kind));
    const std::set<LabelSet> want{{"A" + num(d - 2), "C" + num(d - 2) + "'"}, {"B", "D"}};
    c.expect(connector_set(cert) == want, tag + ": unexpected connector edges");
    c.expect(static_cast<bool>(verify_certificate(cert, q)), tag + ": certificate does not verify");
    const GeometricGraph g = skeleton(q);
    c.expect(summand_space(g, d).dimension() == d + 1, tag + ": summand space of P' is not d+1");
    c.expect(oracle::summand_dimension_te(g, d) == d + 1, tag + ": oracle summand dimension of P' is not d+1");
  }
}

void criterion_3(Check& c) {
  for (std::size_t d = 4; d <= 6; ++d) {
    const VPolytope p = build_family(FamilyId::P, params(d));
    const Vector u = e(d, d - 1);
    const auto s = segment_summand_check(p, u);
    c.expect(s.has_value(), "d=" + num(d) + ": no segment summand along e_{d-1}");
    if (s) {
      const VPolytope seg(d, {{"o", zero_vector(d)}, {"u", s->mu * u}});
      c.expect(same_point_set(minkowski_sum(s->core, seg), p), "d=" + num(d) + ": core + segment is not P");
    }
  }
}

// A segment summand along some edge direction, with exact reconstruction.
bool has_segment_summand(const VPolytope& p) {
  const GeometricGraph g = skeleton(p);
  for (const auto& [a, b] : g.edges()) {
    const Vector u = g.point(b) - g.point(a);
    if (auto s = segment_summand_check(p, u)) {
      const VPolytope seg(p.dim(), {{"o", zero_vector(p.dim())}, {"u", s->mu * u}});
      if (same_point_set(minkowski_sum(s->core, seg), p)) return true;
    }
  }
  return false;
}

void check_indecomposable(Check& c, const VPolytope& p, const std::string& tag) {
  c.expect(!is_decomposable(p).decomposable, tag + ": decomposable");
  try {
    const Certificate cert = certify_indecomposable(p);
    const CheckResult r = verify_certificate(cert, p);
    c.expect(r.valid, tag + ": certificate rejected: " + r.reason);
  } catch (const DecomposableInput&) {
    c.expect(false, tag + ": certifier found a nontrivial summand");
  }
}

void criterion_4(Check& c) {
  for (std::size_t d = 4; d <= 5; ++d) {
    const std::string tag = "d=" + num(d);
    const VPolytope p = build_family(FamilyId::BarP, params(d));
    c.expect(p.size() == 4 * d - 4 && redundant_points(p).empty(), tag + ": vertex count");
    c.expect(convex_hull(p).polytope.facets.size() == d + 5, tag + ": facet count");
    c.expect(is_decomposable(p).decomposable, tag + ": bar P not decomposable");
    c.expect(has_segment_summand(p), tag + ": bar P has no segment summand");
    const VPolytope q = build_family(FamilyId::BarPprime, params(d));
    c.expect(combinatorially_equivalent(p, q).has_value(), tag + ": bar P' not equivalent to bar P");
    check_indecomposable(c, q, tag + " bar P'");
  }
}

void criterion_5(Check& c) {
  for (std::size_t d = 4; d <= 5; ++d) {
    const std::string tag = "d=" + num(d);
    const ConstructionParams pr = params(d);
    const VPolytope sq = build_family(FamilyId::StackedQ, pr);
    c.expect(sq.size() == 4 * d - 2 && redundant_points(sq).empty(), tag + ": vertex count");

    // Bipyramid over the bottom facet {A_i, B_i} with apexes at its centroid
    // shifted by -h e_d and +h e_d, plus the segment [0, 3 e_d].
    const VPolytope q = build_family(FamilyId::Q, pr);
    std::vector<LabeledPoint> bip;
    Vector centroid = zero_vector(d);
    for (const auto& v : q.vertices()) {
      if (v.label.front() == 'A' || v.label.front() == 'B') {
        bip.push_back(v);
        centroid = centroid + v.point;
      }
    }
    centroid = Scalar(1, bip.size()) * centroid;
    bip.push_back({"down", centroid - pr.stack_height * e(d, d)});
    bip.push_back({"up", centroid + pr.stack_height * e(d, d)});
    const VPolytope bipyramid(d, bip);
    const VPolytope seg(d, {{"o", zero_vector(d)}, {"t", Scalar(3) * e(d, d)}});
    c.expect(same_point_set(minkowski_sum(bipyramid, seg), sq), tag + ": StackedQ != bipyramid + segment");
    c.expect(is_decomposable(sq).decomposable, tag + ": StackedQ not decomposable");

    const VPolytope sqp = build_family(FamilyId::StackedQprime, pr);
    c.expect(combinatorially_equivalent(sq, sqp).has_value(), tag + ": StackedQprime not equivalent");
    check_indecomposable(c, sqp, tag + " StackedQprime");
  }
}

void criterion_6(Check& c) {
  const VPolytope p = build_family(FamilyId::P, params(4));
  const VPolytope q = build_family(FamilyId::Pprime, params(4));
  const VPolytope sp = stack_pyramid(p, find_facet(p, {"C1", "C2", "C", "D"}), 1);
  const VPolytope sq = stack_pyramid(q, find_facet(q, {"C1'", "C2'", "C'", "D"}), 1);
  for (const auto* s : {&sp, &sq}) {
    c.expect(s->size() == 13, "stacked polytope has " + num(s->size()) + " vertices");
    c.expect(convex_hull(*s).polytope.facets.size() == 9 + 3, "stacked polytope facet count");
  }
  c.expect(combinatorially_equivalent(sp, sq).has_value(), "stacked polytopes not equivalent");
  c.expect(is_decomposable(sp).decomposable, "stacked P not decomposable");
  check_indecomposable(c, sq, "stacked P'");
}

void criterion_7(Check& c) {
  for (auto [base, pert] : {std::pair{FamilyId::P, FamilyId::Pprime}, std::pair{FamilyId::BarP, FamilyId::BarPprime}}) {
    const std::string tag = to_string(base) + "(3)";
    const VPolytope p = build_family(base, params(3));
    c.expect(p.size() == 8 && redundant_points(p).empty(), tag + ": V != 8");
    c.expect(convex_hull(p).polytope.facets.size() == 8, tag + ": F != 8");
    c.expect(is_decomposable(p).decomposable, tag + ": not decomposable");
    const VPolytope q = build_family(pert, params(3));
    c.expect(combinatorially_equivalent(p, q).has_value(), tag + ": perturbed partner not equivalent");
    check_indecomposable(c, q, to_string(pert) + "(3)");
  }
}

void criterion_8(Check& c) {
  const VPolytope p = build_family(FamilyId::P, params(4));
  const Hyperplane h{e(4, 3), Scalar(3, 2)};
  const VPolytope s = cross_section(p, h);
  c.expect(s.size() == 6, "section has " + num(s.size()) + " vertices");
  c.expect(combinatorially_equivalent(s, simplex_prism(3)).has_value(), "section is not a triangular prism");
  LabelSet below, above;
  for (const auto& v : p.vertices()) (sgn(h.evaluate(v.point)) < 0 ? below : above).insert(v.label);
  c.expect(below == LabelSet{"A", "A1", "A2", "B", "B1", "B2"}, "wrong vertex split below the section");
  c.expect(above == LabelSet{"C", "C1", "C2", "D", "D1", "D2"}, "wrong vertex split above the section");
}

// Non-edges of P(4) among all vertex pairs: the listed pairs, the further
// cross pairs found by both edge routes, and the non-edges of the base
// product of a segment and a square.
std::set<LabelSet> expected_non_edges(const std::string& prime, std::set<LabelSet>& listed) {
  const std::string C = "C" + prime;
  auto Ci = [&](int i) { return "C" + num(i) + prime; };
  listed.clear();
  for (int i = 1; i <= 2; ++i) {
    const std::string Ai = "A" + num(i), Bi = "B" + num(i), Di = "D" + num(i);
    listed.insert({"A", Bi});
    listed.insert({"A", Di});
    listed.insert({C, Bi});
    listed.insert({C, Di});
    listed.insert({"B", Ci(i)});
    listed.insert({"D", Ai});
    listed.insert({Ai, C});
  }
  std::set<LabelSet> all = listed;
  for (int i = 1; i <= 2; ++i) {
    all.insert({"A", Ci(i)});
    all.insert({"B", "D" + num(i)});
    all.insert({"D", "B" + num(i)});
  }
  all.insert({"A", "D"});
  all.insert({"B", C});
  // Square corners A, B, D, C in cyclic order.
  const std::vector<std::string> corner{"A", "B", "D", "C"};
  auto name = [&](std::size_t k, int i) { return corner[k] == "C" ? Ci(i) : corner[k] + num(i); };
  auto square_adjacent = [](std::size_t a, std::size_t b) { return (a + 1) % 4 == b || (b + 1) % 4 == a; };
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
          if (a == b && i == j) continue;
          const bool adjacent = (i == j && square_adjacent(a, b)) || (i != j && a == b);
          if (!adjacent) all.insert({name(a, i), name(b, j)});
        }
      }
    }
  }
  return all;
}

std::set<LabelSet> non_edges(const VPolytope& p, const std::set<LabelSet>& edges) {
  std::set<LabelSet> out;
  for (std::size_t u = 0; u < p.size(); ++u) {
    for (std::size_t v = u + 1; v < p.size(); ++v) {
      LabelSet s{p.label(u), p.label(v)};
      if (!edges.count(s)) out.insert(s);
    }
  }
  return out;
}

void criterion_9(Check& c) {
  const VPolytope p = build_family(FamilyId::P, params(4));
  const VPolytope q = build_family(FamilyId::Pprime, params(4));
  const auto ep = edge_set(p);
  const auto eq = edge_set(q);
  c.expect(ep == oracle_edge_set(p), "P(4) edges disagree with the projection oracle");
  c.expect(eq == oracle_edge_set(q), "P'(4) edges disagree with the projection oracle");

  std::set<LabelSet> listed_p, listed_q;
  const auto want_p = expected_non_edges("", listed_p);
  const auto want_q = expected_non_edges("'", listed_q);
  for (const auto& s : listed_p) c.expect(!ep.count(s), "listed pair {" + *s.begin() + "," + *s.rbegin() + "} is an edge of P");
  for (const auto& s : listed_q) c.expect(!eq.count(s), "listed pair {" + *s.begin() + "," + *s.rbegin() + "} is an edge of P'");
  c.expect(non_edges(p, ep) == want_p, "non-edges of P(4) differ from the expected set");
  c.expect(non_edges(q, eq) == want_q, "non-edges of P'(4) differ from the expected set");

  const auto iso = combinatorially_equivalent(p, q);
  c.expect(iso.has_value(), "no isomorphism");
  if (iso) {
    std::set<LabelSet> image;
    for (const auto& s : ep) image.insert({iso->image(*s.begin()), iso->image(*s.rbegin())});
    c.expect(image == eq, "isomorphism does not carry edges onto edges");
  }
}

void criterion_10(Check& c) {
  std::mt19937_64 rng(20240601);
  const Scalar ks[] = {Scalar(1, 3), Scalar(2), Scalar(5)};
  for (int i = 0; i < 100; ++i) {
    const std::size_t d = 3 + rng() % 2;
    const std::size_t n = 6 + rng() % 7;
    const VPolytope p = random_polytope(rng, d, n);
    Vector a(d);
    do {
      for (auto& x : a) x = Scalar(static_cast<long>(rng() % 7) - 3) / static_cast<long>(rng() % 2 + 1);
    } while (is_zero(a));
    const Scalar k = ks[rng() % 3];
    const Lemma1Report r = verify_lemma1(p, a, k);
    c.expect(r.passed, "instance " + num(i) + (r.failures.empty() ? "" : ": " + r.failures.front()));
  }
}

// Random invertible map with c . v + delta >= 1 on every vertex.
VPolytope random_projective_image(std::mt19937_64& rng, const VPolytope& p) {
  const std::size_t d = p.dim();
  std::uniform_int_distribution<int> coef(-2, 2);
  for (;;) {
    Matrix A(d, Vector(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) A[i][j] = coef(rng) + (i == j ? 3 : 0);
    }
    Vector b(d), cv(d);
    for (auto& x : b) x = coef(rng);
    for (auto& x : cv) x = Scalar(coef(rng)) / 5;
    Scalar delta = 1;
    for (const auto& x : p.points()) {
      const Scalar need = 1 - dot(cv, x);
      if (need > delta) delta = need;
    }
    Matrix hom = A;
    for (std::size_t i = 0; i < d; ++i) hom[i].push_back(b[i]);
    Vector last = cv;
    last.push_back(delta);
    hom.push_back(last);
    if (rank(hom, d + 1) == d + 1) return projective_map(p, A, b, cv, delta);
  }
}

void criterion_11(Check& c) {
  std::mt19937_64 rng(11);
  struct Entry {
    std::string name;
    VPolytope p;
    bool decomposable;
  };
  std::vector<Entry> corpus;
  for (std::size_t d = 2; d <= 6; ++d) corpus.push_back({"simplex " + num(d), standard_simplex(d), false});
  for (std::size_t d = 2; d <= 4; ++d) corpus.push_back({"cube " + num(d), cube(d), true});
  for (std::size_t d = 3; d <= 5; ++d) corpus.push_back({"prism " + num(d), simplex_prism(d), true});
  corpus.push_back({"simplex 3 + segment", segment_sum(standard_simplex(3), {1, 2, 3}, 1), true});
  corpus.push_back({"simplex 4 + segment", segment_sum(standard_simplex(4), {1, -1, 2, 1}, 2), true});
  corpus.push_back({"octahedron + segment", segment_sum(cross_polytope(3), {0, 1, 2}, 1), true});
  for (int i = 0; i < 2; ++i) {
    const VPolytope r = random_polytope(rng, 3, 7);
    corpus.push_back({"random " + num(i) + " + segment", segment_sum(r, {1, 1, -2}, 1), true});
  }

  for (const auto& entry : corpus) {
    const bool verdict = is_decomposable(entry.p).decomposable;
    c.expect(verdict == entry.decomposable, entry.name + ": wrong verdict");
    const GeometricGraph g = skeleton(entry.p);
    c.expect((oracle::summand_dimension_te(g, entry.p.dim()) > entry.p.dim() + 1) == entry.decomposable,
             entry.name + ": oracle verdict disagrees");
    const Certificate cert = certify(entry.p);
    c.expect(cert.asserts_indecomposable() == !entry.decomposable, entry.name + ": certificate asserts the wrong verdict");
    const CheckResult r = verify_certificate(cert, entry.p);
    c.expect(r.valid, entry.name + ": certificate rejected: " + r.reason);
    for (int t = 0; t < 20; ++t) {
      const VPolytope img = random_projective_image(rng, entry.p);
      c.expect(is_decomposable(img).decomposable == verdict, entry.name + ": verdict changed under projective map " + num(t));
    }
  }
}

void criterion_12(Check& c) {
  const MainTheoremReport prism = check_main_theorem_instance(simplex_prism(4));
  c.expect(!prism.precondition_failed && prism.passed, "simplex prism did not pass every step");
  for (const auto& s : prism.steps) c.expect(s.ok, "step '" + s.name + "' failed: " + s.detail);
  const MainTheoremReport p = check_main_theorem_instance(build_family(FamilyId::P, params(4)));
  c.expect(p.precondition_failed && !p.passed, "P(4) did not report the vertex-count precondition failure");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"facet lists of P(d) and P'(d), d = 4..7", criterion_1},
      {"P/P' conditional decomposability, d = 4..6", criterion_2},
      {"segment summand along e_{d-1}, d = 4..6", criterion_3},
      {"bar family, d = 4, 5", criterion_4},
      {"stacked Q family, d = 4, 5", criterion_5},
      {"simplex gluing on P(4) and P'(4)", criterion_6},
      {"d = 3 members with V = F = 8", criterion_7},
      {"cross-section of P(4) at x_3 = 3/2", criterion_8},
      {"non-adjacency in P(4) and P'(4)", criterion_9},
      {"100 random segment-sum equivalences", criterion_10},
      {"oracle consistency corpus", criterion_11},
      {"segment-summand theorem boundary", criterion_12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!ok) std::cout << " (" << c.failures.size() << " problems; first: " << c.failures.front() << ")";
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
