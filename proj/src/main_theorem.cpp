#include <algorithm>
#include <map>
#include <set>

#include "polyforge/decomp.hpp"
#include "polyforge/equiv.hpp"
#include "polyforge/families.hpp"
#include "polyforge/hull.hpp"

namespace polyforge {

namespace {

std::string str(std::size_t n) { return std::to_string(n); }

bool inside(const HPolytope& h, const Vector& x) {
  return std::all_of(h.facets.begin(), h.facets.end(), [&](const Hyperplane& f) { return sgn(f.evaluate(x)) >= 0; });
}

std::set<std::set<std::string>> facet_label_sets(const Hull& h) {
  std::set<std::set<std::string>> out;
  for (const auto& f : h.incidence.facets) {
    std::set<std::string> s;
    for (auto v : f.indices()) s.insert(h.incidence.vertex_labels[v]);
    out.insert(std::move(s));
  }
  return out;
}

// The label-preserving map is an incidence isomorphism.
bool same_labelled_combinatorics(const VPolytope& a, const VPolytope& b) {
  const auto la = a.labels();
  const auto lb = b.labels();
  if (std::set<std::string>(la.begin(), la.end()) != std::set<std::string>(lb.begin(), lb.end())) return false;
  return facet_label_sets(convex_hull(intrinsic(a))) == facet_label_sets(convex_hull(intrinsic(b)));
}

// Candidate segment directions: edge directions up to sign, most frequent first.
std::vector<Vector> parallel_edge_classes(const GeometricGraph& g) {
  std::map<IntVector, std::size_t> count;
  for (const auto& [u, v] : g.edges()) {
    IntVector dir = primitive_integer(g.point(u) - g.point(v));
    const auto nz = std::find_if(dir.begin(), dir.end(), [](const mpz_class& x) { return sgn(x) != 0; });
    if (nz != dir.end() && sgn(*nz) < 0) {
      for (auto& x : dir) x = -x;
    }
    ++count[dir];
  }
  std::vector<std::pair<IntVector, std::size_t>> classes(count.begin(), count.end());
  std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<Vector> out;
  for (const auto& c : classes) out.push_back(to_rational(c.first));
  return out;
}

struct Line {
  Vector a;
  Vector b;
};

// Intersection point of two coplanar, non-parallel lines.
std::optional<Vector> meet(const Line& l1, const Line& l2) {
  const Vector d1 = l1.b - l1.a;
  const Vector d2 = l2.b - l2.a;
  const Vector w = l1.a - l2.a;
  Matrix rows;
  for (std::size_t i = 0; i < d1.size(); ++i) rows.push_back({d1[i], -d2[i], w[i]});
  for (const auto& x : nullspace(rows, 3)) {
    // s d1 - t d2 + r (a1 - a2) = 0
    if (sgn(x[2]) != 0) return l1.a + Scalar(x[0] / x[2]) * d1;
  }
  return std::nullopt;
}

bool on_line(const Line& l, const Vector& z) {
  return rank({l.b - l.a, z - l.a}) <= 1;
}

}  // namespace

VPolytope normalize_concurrent_lines(const VPolytope& p, const Vector& z) {
  if (!p.full_dimensional()) throw PreconditionError("projective normalization needs a full-dimensional polytope");
  if (z.size() != p.dim()) throw PreconditionError("concurrency point has the wrong dimension");
  const Hull h = convex_hull(p);
  const auto violated = std::find_if(h.polytope.facets.begin(), h.polytope.facets.end(),
                                     [&](const Hyperplane& f) { return sgn(f.evaluate(z)) < 0; });
  if (violated == h.polytope.facets.end()) throw PreconditionError("concurrency point lies in the polytope");
  const Vector& alpha = violated->normal;
  const std::size_t d = p.dim();
  Vector b = zero_vector(d);
  if (sgn(dot(alpha, z)) == 0) {
    const auto k = static_cast<std::size_t>(
        std::find_if(alpha.begin(), alpha.end(), [](const Scalar& x) { return sgn(x) != 0; }) - alpha.begin());
    b = unit_vector(d, k);
  }
  Matrix identity;
  for (std::size_t i = 0; i < d; ++i) identity.push_back(unit_vector(d, i));
  return projective_map(p, identity, b, alpha, Scalar(-dot(alpha, z)));
}

MainTheoremReport check_main_theorem_instance(const VPolytope& p, std::size_t budget) {
  if (!p.full_dimensional()) throw PreconditionError("main theorem check needs a full-dimensional polytope");
  require_irredundant(p);
  MainTheoremReport report;
  auto step = [&](std::string name, bool ok, std::string detail) {
    report.steps.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };
  auto finish = [&]() {
    report.passed = !report.precondition_failed &&
                    std::all_of(report.steps.begin(), report.steps.end(), [](const TheoremStep& s) { return s.ok; });
    return report;
  };

  const std::size_t d = p.dim();
  const std::size_t n = p.size();
  const std::size_t limit = 4 * d - 5;
  if (n > limit) {
    report.precondition_failed = true;
    step("vertex count", false, str(n) + " vertices exceed 4d-5 = " + str(limit));
    return finish();
  }
  step("vertex count", true, str(n) + " <= 4d-5 = " + str(limit));

  const GeometricGraph g = skeleton(p);
  Vector u;
  Scalar mu;
  for (const auto& dir : parallel_edge_classes(g)) {
    if (auto s = segment_summand_check(p, dir)) {
      u = dir;
      mu = s->mu;
      break;
    }
  }
  if (u.empty()) {
    step("segment summand", false, "no edge direction is a segment summand");
    return finish();
  }
  std::string udesc;
  for (const auto& x : u) udesc += (udesc.empty() ? "" : ",") + to_string(x);
  step("segment summand", true, "p = K + [0, " + to_string(mu) + " u], u = (" + udesc + ")");

  // Lower vertices have their translate by mu u in p.
  const Hull hp = convex_hull(p);
  const Vector shift = mu * u;
  std::vector<std::size_t> lower, upper;
  for (std::size_t v = 0; v < n; ++v) (inside(hp.polytope, p.point(v) + shift) ? lower : upper).push_back(v);
  bool paired = !lower.empty() && !upper.empty();
  for (auto v : upper) paired = paired && inside(hp.polytope, p.point(v) - shift);
  if (!step("vertex partition", paired, str(lower.size()) + " lower, " + str(upper.size()) + " upper")) return finish();

  // Stretch the summand until a hyperplane orthogonal to u separates the sides.
  const Scalar uu = dot(u, u);
  Scalar top_lower = dot(u, p.point(lower.front()));
  for (auto v : lower) top_lower = std::max(top_lower, Scalar(dot(u, p.point(v))));
  Scalar bottom_upper = dot(u, p.point(upper.front()));
  for (auto v : upper) bottom_upper = std::min(bottom_upper, Scalar(dot(u, p.point(v))));
  const Scalar overlap = (top_lower - bottom_upper) / (mu * uu);
  mpz_class stretch = 1;
  if (sgn(overlap) >= 0) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), overlap.get_num_mpz_t(), overlap.get_den_mpz_t());
    stretch = fl + 2;
  }
  std::vector<LabeledPoint> stretched;
  for (std::size_t v = 0; v < n; ++v) {
    const bool up = std::find(upper.begin(), upper.end(), v) != upper.end();
    stretched.push_back({p.label(v), up ? Vector(p.point(v) + Scalar(stretch - 1) * shift) : p.point(v)});
  }
  const VPolytope pl(d, std::move(stretched));
  const bool equivalent = combinatorially_equivalent(p, pl).has_value() && same_labelled_combinatorics(p, pl);
  if (!step("stretched summand", equivalent, "K + [0, " + stretch.get_str() + " mu u] keeps the face lattice")) {
    return finish();
  }

  const Scalar lo = top_lower;
  const Scalar hi = bottom_upper + Scalar(stretch - 1) * mu * uu;
  if (!step("separating hyperplanes", lo < hi, "u.x in (" + to_string(lo) + ", " + to_string(hi) + ")")) return finish();
  const Scalar gap = hi - lo;
  const Hyperplane h1{u, Scalar(lo + gap / 3)};
  const Hyperplane h2{u, Scalar(lo + 2 * gap / 3)};
  const VPolytope c1 = cross_section(pl, h1);
  const VPolytope c2 = cross_section(pl, h2);
  const bool sections = combinatorially_equivalent(c1, c2).has_value() && same_labelled_combinatorics(c1, c2);
  if (!step("parallel cross-sections", sections,
            "C1 and C2 have " + str(c1.size()) + " and " + str(c2.size()) + " vertices")) {
    return finish();
  }

  const std::size_t small = std::min(lower.size(), upper.size());
  step("small side", small <= 2 * d - 3, "smaller side has " + str(small) + " vertices, bound 2d-3 = " + str(2 * d - 3));

  const VPolytope k1 = intrinsic(c1);
  const GeometricGraph g1 = skeleton(k1);
  const IncidenceMatrix inc1 = convex_hull(k1).incidence;
  auto chain = find_triangular_chain(g1, ChainMode::CoverVertices, inc1, budget);
  std::string chain_mode = "covers every vertex of C1";
  if (!chain) {
    chain = find_triangular_chain(g1, ChainMode::TouchFacets, inc1, budget);
    chain_mode = "touches every facet of C1";
  }
  if (!step("triangular chain", chain.has_value(),
            chain ? str(chain->triangles.size()) + " triangles, " + chain_mode : "no chain in C1")) {
    return finish();
  }

  // Each section vertex "x~y" lies on the edge [x, y] of the stretched polytope.
  auto line_of = [&](const std::string& label) {
    const auto cut = label.find('~');
    return Line{pl.point(label.substr(0, cut)), pl.point(label.substr(cut + 1))};
  };
  const Hull hl = convex_hull(pl);
  bool coplanar = true;
  std::string where;
  for (const auto& t : chain->triangles) {
    const Line l[3] = {line_of(t[0]), line_of(t[1]), line_of(t[2])};
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (!lines_coplanar(l[i].a, l[i].b, l[j].a, l[j].b)) {
          coplanar = false;
          where = t[i] + " / " + t[j];
        }
      }
    }
    VertexSet ends(pl.size());
    for (const auto& label : t) {
      const auto cut = label.find('~');
      ends.set(pl.index_of(label.substr(0, cut)));
      ends.set(pl.index_of(label.substr(cut + 1)));
    }
    VertexSet face = VertexSet::full(pl.size());
    for (auto f : hl.incidence.facets_containing(ends)) face &= hl.incidence.facets[f];
    std::vector<Vector> pts;
    for (auto v : face.indices()) pts.push_back(pl.point(v));
    if (affine_dimension(pts) != 3) {
      coplanar = false;
      where = "triangle " + t[0] + ", " + t[1] + ", " + t[2] + " is not in a 3-face";
    }
  }
  if (!step("coplanar connectors", coplanar, coplanar ? "every chain triangle spans a 3-face" : where)) return finish();

  std::vector<Line> lines;
  for (const auto& label : chain->vertex_labels()) lines.push_back(line_of(label));
  std::optional<std::size_t> skewed;
  for (std::size_t i = 1; i < lines.size() && !skewed; ++i) {
    if (!lines_parallel(lines[0].a, lines[0].b, lines[i].a, lines[i].b)) skewed = i;
  }
  if (!skewed) {
    step("parallel or concurrent", true, "all " + str(lines.size()) + " connector lines are parallel");
    return finish();
  }
  const auto z = meet(lines[0], lines[*skewed]);
  const bool concurrent =
      z && std::all_of(lines.begin(), lines.end(), [&](const Line& l) { return on_line(l, *z); }) &&
      !inside(hl.polytope, *z);
  std::string zdesc;
  if (z) {
    for (const auto& x : *z) zdesc += (zdesc.empty() ? "" : ",") + to_string(x);
  }
  if (!step("parallel or concurrent", concurrent,
            concurrent ? "lines meet at (" + zdesc + ") outside the polytope" : "lines are neither parallel nor concurrent")) {
    return finish();
  }

  const VPolytope normalized = normalize_concurrent_lines(pl, *z);
  bool parallel = true;
  std::vector<Line> mapped;
  for (const auto& label : chain->vertex_labels()) {
    const auto cut = label.find('~');
    mapped.push_back({normalized.point(label.substr(0, cut)), normalized.point(label.substr(cut + 1))});
  }
  for (std::size_t i = 1; i < mapped.size(); ++i) {
    parallel = parallel && lines_parallel(mapped[0].a, mapped[0].b, mapped[i].a, mapped[i].b);
  }
  step("projective normalization", parallel, parallel ? "connector lines become parallel" : "image lines not parallel");
  return finish();
}

}  // namespace polyforge
