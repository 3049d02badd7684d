#include "polyforge/families.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polyforge/equiv.hpp"
#include "polyforge/error.hpp"
#include "polyforge/hull.hpp"

namespace polyforge {

namespace {

const std::map<std::string, FamilyId, std::less<>>& family_names() {
  static const std::map<std::string, FamilyId, std::less<>> names{
      {"P", FamilyId::P},
      {"Pprime", FamilyId::Pprime},
      {"BarP", FamilyId::BarP},
      {"BarPprime", FamilyId::BarPprime},
      {"Q", FamilyId::Q},
      {"Qprime", FamilyId::Qprime},
      {"DeltaBase", FamilyId::DeltaBase},
      {"StackedQ", FamilyId::StackedQ},
      {"StackedQprime", FamilyId::StackedQprime},
  };
  return names;
}

class Builder {
 public:
  explicit Builder(std::size_t d) : d_(d) {}

  // 1-based unit vector.
  Vector e(std::size_t k) const { return unit_vector(d_, k - 1); }
  Vector zero() const { return zero_vector(d_); }

  void add(std::string label, Vector p) { pts_.push_back({std::move(label), std::move(p)}); }
  std::vector<LabeledPoint> take() { return std::move(pts_); }

 private:
  std::size_t d_;
  std::vector<LabeledPoint> pts_;
};

// A_i for the P families: e_i for i <= d-3, the origin for i = d-2.
Vector base_a(const Builder& b, std::size_t d, std::size_t i) { return i <= d - 3 ? b.e(i) : b.zero(); }

// Delta(1,1,d-3) base facet, with an optional replacement for the C_i.
void add_delta(Builder& b, std::size_t d, const std::optional<Scalar>& c_shift) {
  const std::size_t m = d - 2;
  for (std::size_t i = 1; i <= m; ++i) b.add("A" + std::to_string(i), base_a(b, d, i));
  for (std::size_t i = 1; i <= m; ++i) b.add("B" + std::to_string(i), base_a(b, d, i) + b.e(d - 2));
  for (std::size_t i = 1; i <= m; ++i) {
    if (c_shift) {
      b.add("C" + std::to_string(i) + "'", base_a(b, d, i) + (*c_shift) * b.e(d - 2) + Scalar(3) * b.e(d - 1));
    } else {
      b.add("C" + std::to_string(i), base_a(b, d, i) + Scalar(3) * b.e(d - 1));
    }
  }
  for (std::size_t i = 1; i <= m; ++i) {
    b.add("D" + std::to_string(i), base_a(b, d, i) + b.e(d - 2) + Scalar(3) * b.e(d - 1));
  }
}

Vector perturbed_c(const Builder& b, std::size_t d, const Scalar& eps) {
  return (-eps) * b.e(d - 2) + (Scalar(2) - eps) * b.e(d - 1) + b.e(d);
}

VPolytope build_p(std::size_t d, const std::optional<Scalar>& eps) {
  Builder b(d);
  std::optional<Scalar> shift;
  if (eps) shift = Scalar(Scalar(3) * (*eps) / (*eps - 1));
  add_delta(b, d, shift);
  b.add("A", b.e(d - 1) + b.e(d));
  b.add("B", b.e(d - 2) + b.e(d));
  if (eps) b.add("C'", perturbed_c(b, d, *eps));
  else b.add("C", Scalar(2) * b.e(d - 1) + b.e(d));
  b.add("D", b.e(d - 2) + Scalar(3) * b.e(d - 1) + b.e(d));
  return VPolytope(d, b.take());
}

VPolytope build_bar_p(std::size_t d, const std::optional<Scalar>& eps) {
  Builder b(d);
  std::optional<Scalar> shift;
  if (eps) shift = Scalar(Scalar(3) * (*eps) / (*eps - 3));
  add_delta(b, d, shift);
  b.add("Abar", -b.e(d - 1) + b.e(d));
  b.add("Bbar", b.e(d - 2) + b.e(d));
  if (eps) b.add("Cbar'", perturbed_c(b, d, *eps));
  else b.add("Cbar", Scalar(2) * b.e(d - 1) + b.e(d));
  b.add("Dbar", b.e(d - 2) + Scalar(3) * b.e(d - 1) + b.e(d));
  return VPolytope(d, b.take());
}

// Delta(1,1,d-2): A_i = e_i (i <= d-2), A_{d-1} = 0, square in the last two
// coordinates.
VPolytope build_q(std::size_t d, const std::optional<Scalar>& eps) {
  Builder b(d);
  const std::size_t m = d - 1;
  auto a = [&](std::size_t i) { return i <= d - 2 ? b.e(i) : b.zero(); };
  for (std::size_t i = 1; i <= m; ++i) b.add("A" + std::to_string(i), a(i));
  for (std::size_t i = 1; i <= m; ++i) b.add("B" + std::to_string(i), a(i) + b.e(d - 1));
  for (std::size_t i = 1; i <= m; ++i) {
    if (eps) b.add("C" + std::to_string(i) + "'", a(i) - (*eps) * b.e(d - 1) + Scalar(3) * b.e(d));
    else b.add("C" + std::to_string(i), a(i) + Scalar(3) * b.e(d));
  }
  for (std::size_t i = 1; i <= m; ++i) b.add("D" + std::to_string(i), a(i) + b.e(d - 1) + Scalar(3) * b.e(d));
  return VPolytope(d, b.take());
}

std::size_t find_facet(const VPolytope& p, const Hyperplane& target) {
  const Hull h = convex_hull(p);
  const Hyperplane want = canonical_oriented(target);
  for (std::size_t f = 0; f < h.polytope.facets.size(); ++f) {
    if (h.polytope.facets[f] == want) return f;
  }
  throw InternalError("expected facet " + to_string(want) + " not found");
}

VPolytope build_stacked_q(std::size_t d, const std::optional<Scalar>& eps, const Scalar& h) {
  const VPolytope q = build_q(d, eps);
  const Vector e_d = unit_vector(d, d - 1);
  const VPolytope bottom = stack_pyramid(q, find_facet(q, Hyperplane{e_d, Scalar(0)}), h, "Bot");
  return stack_pyramid(bottom, find_facet(bottom, Hyperplane{-e_d, Scalar(-3)}), h, "Top");
}

VPolytope construct(FamilyId f, const ConstructionParams& params) {
  const std::size_t d = params.d;
  switch (f) {
    case FamilyId::P: return build_p(d, std::nullopt);
    case FamilyId::Pprime: return build_p(d, params.eps);
    case FamilyId::BarP: return build_bar_p(d, std::nullopt);
    case FamilyId::BarPprime: return build_bar_p(d, params.eps);
    case FamilyId::Q: return build_q(d, std::nullopt);
    case FamilyId::Qprime: return build_q(d, params.eps);
    case FamilyId::StackedQ: return build_stacked_q(d, std::nullopt, params.stack_height);
    case FamilyId::StackedQprime: return build_stacked_q(d, params.eps, params.stack_height);
    case FamilyId::DeltaBase: {
      Builder b(d);
      add_delta(b, d, std::nullopt);
      return VPolytope(d, b.take());
    }
  }
  throw InternalError("unknown family");
}

}  // namespace

FamilyId parse_family_id(std::string_view name) {
  const auto& names = family_names();
  const auto it = names.find(name);
  if (it == names.end()) throw ParseError("unknown family '" + std::string(name) + "'");
  return it->second;
}

std::string to_string(FamilyId id) {
  for (const auto& [name, f] : family_names()) {
    if (f == id) return name;
  }
  return "?";
}

bool is_perturbed(FamilyId id) {
  return id == FamilyId::Pprime || id == FamilyId::BarPprime || id == FamilyId::Qprime ||
         id == FamilyId::StackedQprime;
}

FamilyId unperturbed_partner(FamilyId id) {
  switch (id) {
    case FamilyId::Pprime: return FamilyId::P;
    case FamilyId::BarPprime: return FamilyId::BarP;
    case FamilyId::Qprime: return FamilyId::Q;
    case FamilyId::StackedQprime: return FamilyId::StackedQ;
    default: return id;
  }
}

VPolytope build_family(FamilyId family, const ConstructionParams& params) {
  if (params.d < 3) {
    throw PreconditionError("family " + to_string(family) + " needs d >= 3, got " + std::to_string(params.d));
  }
  if (is_perturbed(family)) {
    if (sgn(params.eps) <= 0) throw PreconditionError("eps must be positive");
    if ((family == FamilyId::Pprime && params.eps == 1) || (family == FamilyId::BarPprime && params.eps == 3)) {
      throw PreconditionError("eps = " + to_string(params.eps) + " is a pole of the perturbation");
    }
  }
  if (sgn(params.stack_height) <= 0) throw PreconditionError("stack height must be positive");

  VPolytope p = construct(family, params);
  if (family == FamilyId::DeltaBase) {
    require_irredundant(p);
    return p;
  }
  try {
    require_irredundant(p);
    if (!p.full_dimensional()) throw PreconditionError("construction is not full-dimensional");
  } catch (const PreconditionError& e) {
    if (is_perturbed(family)) {
      throw PreconditionError("eps = " + to_string(params.eps) + " rejected: " + e.what());
    }
    throw;
  }
  if (is_perturbed(family) && params.validate_eps) {
    const VPolytope partner = construct(unperturbed_partner(family), params);
    if (!combinatorially_equivalent(partner, p)) {
      throw PreconditionError("eps = " + to_string(params.eps) + " rejected: " + to_string(family) +
                              " is not combinatorially equivalent to " + to_string(unperturbed_partner(family)));
    }
  }
  return p;
}

VPolytope stack_pyramid(const VPolytope& p, std::size_t facet_index, const Scalar& h, const std::string& apex_label) {
  if (sgn(h) <= 0) throw PreconditionError("stacking height must be positive");
  if (p.find(apex_label)) throw PreconditionError("apex label '" + apex_label + "' already in use");
  const Hull hull = convex_hull(p);
  const auto& facets = hull.polytope.facets;
  if (facet_index >= facets.size()) {
    throw PreconditionError("facet index " + std::to_string(facet_index) + " out of range (" +
                            std::to_string(facets.size()) + " facets)");
  }
  const VertexSet& on = hull.incidence.facets[facet_index];
  Vector centroid = zero_vector(p.dim());
  for (auto v : on.indices()) centroid = centroid + p.point(v);
  centroid = Scalar(1, on.count()) * centroid;
  const Vector outward = -facets[facet_index].normal;

  Scalar step = h;
  for (int attempt = 0; attempt <= 64; ++attempt, step /= 2) {
    const Vector apex = centroid + step * outward;
    bool beneath_others = true;
    for (std::size_t f = 0; f < facets.size() && beneath_others; ++f) {
      if (f != facet_index && sgn(facets[f].evaluate(apex)) <= 0) beneath_others = false;
    }
    if (!beneath_others) continue;

    std::vector<LabeledPoint> pts = p.vertices();
    pts.push_back({apex_label, apex});
    VPolytope out(p.dim(), std::move(pts));

    // facets: old - 1 + ridges of the stacked facet
    std::size_t ridges = 0;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (f == facet_index) continue;
      std::vector<Vector> meet;
      for (auto v : (on & hull.incidence.facets[f]).indices()) meet.push_back(p.point(v));
      if (affine_dimension(meet) == static_cast<int>(p.dim()) - 2) ++ridges;
    }
    const Hull stacked = convex_hull(out);
    if (!stacked.redundant_labels().empty() || stacked.polytope.facets.size() != facets.size() - 1 + ridges) {
      throw InternalError("stacked polytope has an unexpected facet structure");
    }
    return out;
  }
  throw PreconditionError("no admissible stacking height found over facet " + std::to_string(facet_index));
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
  if (p.dim() != q.dim()) throw PreconditionError("Minkowski sum of polytopes in different dimensions");
  std::vector<LabeledPoint> pts;
  pts.reserve(p.size() * q.size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) pts.push_back({a.label + "+" + b.label, a.point + b.point});
  }
  return hull_vertices(p.dim(), std::move(pts));
}

bool minkowski_sum_equals(const VPolytope& q, const VPolytope& r, const VPolytope& p) {
  if (q.dim() != p.dim() || r.dim() != p.dim()) return false;
  const Hull h = convex_hull(p);
  std::set<Vector, decltype(&lex_less)> sums(&lex_less);
  for (const auto& a : q.vertices()) {
    for (const auto& b : r.vertices()) {
      Vector s = a.point + b.point;
      for (const auto& f : h.polytope.facets) {
        if (sgn(f.evaluate(s)) < 0) return false;
      }
      sums.insert(std::move(s));
    }
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (h.is_vertex[i] && !sums.contains(p.point(i))) return false;
  }
  return true;
}

VPolytope segment_sum(const VPolytope& p, const Vector& a, const Scalar& k) {
  if (a.size() != p.dim()) throw PreconditionError("segment direction has the wrong dimension");
  if (is_zero(a)) throw PreconditionError("segment direction is zero");
  if (sgn(k) <= 0) throw PreconditionError("segment scale must be positive");
  const Vector s = k * a;
  std::vector<LabeledPoint> pts;
  for (const auto& v : p.vertices()) pts.push_back({v.label, v.point});
  for (const auto& v : p.vertices()) pts.push_back({v.label + "+a", v.point + s});
  return hull_vertices(p.dim(), std::move(pts));
}

std::optional<SegmentSummand> segment_summand_check(const VPolytope& p, const Vector& u) {
  if (u.size() != p.dim()) throw PreconditionError("direction has the wrong dimension");
  if (is_zero(u)) throw PreconditionError("direction is zero");
  const Hull h = convex_hull(p);
  const Scalar uu = dot(u, u);

  std::set<Scalar> candidates;
  for (const auto& v : p.vertices()) {
    for (const auto& w : p.vertices()) {
      const Scalar mu = dot(v.point - w.point, u) / uu;
      if (sgn(mu) > 0) candidates.insert(mu);
    }
  }
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    const Scalar& mu = *it;
    const Vector shift = mu * u;
    std::vector<Hyperplane> halfspaces = h.polytope.facets;
    for (const auto& f : h.polytope.facets) halfspaces.push_back({f.normal, f.offset - dot(f.normal, shift)});
    const auto core_points = vertices_from_inequalities(halfspaces, p.dim());
    if (core_points.empty()) continue;

    std::vector<LabeledPoint> core;
    std::vector<LabeledPoint> sum;
    for (std::size_t i = 0; i < core_points.size(); ++i) {
      const auto& x = core_points[i];
      std::string label = "K" + std::to_string(i + 1);
      for (const auto& v : p.vertices()) {
        if (v.point == x) label = v.label;
      }
      sum.push_back({label, x});
      sum.push_back({label + "+a", x + shift});
      core.push_back({std::move(label), x});
    }
    if (same_point_set(hull_vertices(p.dim(), std::move(sum)), p)) {
      return SegmentSummand{mu, VPolytope(p.dim(), std::move(core))};
    }
  }
  return std::nullopt;
}

VPolytope standard_simplex(std::size_t d) {
  std::vector<LabeledPoint> pts{{"v0", zero_vector(d)}};
  for (std::size_t i = 0; i < d; ++i) pts.push_back({"v" + std::to_string(i + 1), unit_vector(d, i)});
  return VPolytope(d, std::move(pts));
}

VPolytope cube(std::size_t d) {
  std::vector<LabeledPoint> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::string label = "c";
    Vector x = zero_vector(d);
    for (std::size_t i = 0; i < d; ++i) {
      const bool bit = (mask >> (d - 1 - i)) & 1U;
      label += bit ? '1' : '0';
      if (bit) x[i] = 1;
    }
    pts.push_back({label, x});
  }
  return VPolytope(d, std::move(pts));
}

VPolytope simplex_prism(std::size_t d) {
  std::vector<LabeledPoint> pts;
  for (int layer = 0; layer < 2; ++layer) {
    const std::string prefix = layer == 0 ? "a" : "b";
    for (std::size_t i = 0; i < d; ++i) {
      Vector x = zero_vector(d);
      if (i > 0) x[i - 1] = 1;
      x[d - 1] = layer;
      pts.push_back({prefix + std::to_string(i), x});
    }
  }
  return VPolytope(d, std::move(pts));
}

VPolytope cross_polytope(std::size_t d) {
  std::vector<LabeledPoint> pts;
  for (std::size_t i = 0; i < d; ++i) {
    pts.push_back({"p" + std::to_string(i + 1), unit_vector(d, i)});
    pts.push_back({"m" + std::to_string(i + 1), -unit_vector(d, i)});
  }
  return VPolytope(d, std::move(pts));
}

VPolytope random_polytope(std::mt19937_64& rng, std::size_t d, std::size_t points) {
  if (points < d + 1) throw PreconditionError("need at least d+1 points for a full-dimensional hull");
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  for (;;) {
    std::vector<LabeledPoint> pts;
    for (std::size_t i = 0; i < points; ++i) {
      Vector x;
      for (std::size_t j = 0; j < d; ++j) {
        const int a = num(rng);
        const int b = den(rng);
        Scalar c(a, b);
        c.canonicalize();
        x.push_back(c);
      }
      pts.push_back({"r" + std::to_string(i), std::move(x)});
    }
    VPolytope p = hull_vertices(d, std::move(pts));
    if (p.full_dimensional()) return p;
  }
}

}  // namespace polyforge
