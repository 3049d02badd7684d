#include <algorithm>
#include <set>

#include "polyforge/decomp.hpp"
#include "polyforge/equiv.hpp"
#include "polyforge/families.hpp"
#include "polyforge/hull.hpp"

namespace polyforge {

namespace {

CheckResult ok() { return {true, ""}; }
CheckResult fail(std::string reason) { return {false, std::move(reason)}; }

std::set<std::string> labels_of(const TriangularChain& c) {
  const auto v = c.vertex_labels();
  return {v.begin(), v.end()};
}

// Facets of inc with no vertex from `labels`.
std::vector<std::size_t> untouched_facets(const IncidenceMatrix& inc, const std::set<std::string>& labels) {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < inc.num_facets(); ++f) {
    bool touched = false;
    for (auto v : inc.facets[f].indices()) touched = touched || labels.contains(inc.vertex_labels[v]);
    if (!touched) out.push_back(f);
  }
  return out;
}

Vector flatten(const std::vector<Vector>& field) {
  Vector out;
  for (const auto& x : field) out.insert(out.end(), x.begin(), x.end());
  return out;
}

CheckResult verify_rank_witness(const SummandSpace& space, const VPolytope& p, const GeometricGraph& g) {
  const std::size_t n = p.size();
  const std::size_t d = p.dim();
  if (space.labels != p.labels()) return fail("witness labels differ from the polytope's");
  if (space.ambient_dim != d) return fail("witness dimension differs from the polytope's");
  if (space.dimension() != d + 1) {
    return fail("witness dimension " + std::to_string(space.dimension()) + " is not d+1");
  }
  const Matrix system = summand_constraints(g, d);
  Matrix fields;
  for (const auto& f : space.basis) {
    if (f.size() != n) return fail("basis field has the wrong number of vertices");
    const Vector x = flatten(f);
    if (x.size() != n * d) return fail("basis field has the wrong coordinate length");
    for (const auto& row : system) {
      if (sgn(dot(row, x)) != 0) return fail("basis field violates an edge constraint");
    }
    fields.push_back(x);
  }
  if (rank(fields, n * d) != d + 1) return fail("basis fields are linearly dependent");
  if (rank(system, n * d) != n * d - (d + 1)) return fail("edge constraint system leaves more than d+1 freedoms");
  return ok();
}

}  // namespace

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::ChainCoversVertices: return "ChainCoversVertices";
    case CertificateKind::SubgraphTouchesFacets: return "SubgraphTouchesFacets";
    case CertificateKind::SkewGluing: return "SkewGluing";
    case CertificateKind::RankWitness: return "RankWitness";
    case CertificateKind::SummandPair: return "SummandPair";
  }
  return "?";
}

CertificateKind parse_certificate_kind(const std::string& name) {
  for (auto k : {CertificateKind::ChainCoversVertices, CertificateKind::SubgraphTouchesFacets,
                 CertificateKind::SkewGluing, CertificateKind::RankWitness, CertificateKind::SummandPair}) {
    if (to_string(k) == name) return k;
  }
  throw ParseError("unknown certificate kind '" + name + "'");
}

DecomposableInput::DecomposableInput(SummandSpace space)
    : Error("polytope is decomposable (summand space dimension " + std::to_string(space.dimension()) + " > " +
            std::to_string(space.ambient_dim + 1) + ")"),
      space_(std::move(space)) {}

CheckResult verify_skew_gluing(const TriangularChain& a, const TriangularChain& b, const LabelEdge& e1,
                               const LabelEdge& e2, const GeometricGraph& g) {
  const IncidenceMatrix none;
  const GeometricGraph ga = g.induced([&] {
    VertexSet s(g.size());
    for (const auto& l : a.vertex_labels()) s.set(g.index_of(l));
    return s;
  }());
  const GeometricGraph gb = g.induced([&] {
    VertexSet s(g.size());
    for (const auto& l : b.vertex_labels()) s.set(g.index_of(l));
    return s;
  }());
  if (!verify_triangular_chain(ga, a, ChainMode::CoverVertices, none)) return fail("first piece: invalid chain");
  if (!verify_triangular_chain(gb, b, ChainMode::CoverVertices, none)) return fail("second piece: invalid chain");

  const auto la = labels_of(a);
  const auto lb = labels_of(b);
  for (const auto& l : la) {
    if (lb.contains(l)) return fail("pieces share vertex '" + l + "'");
  }
  for (const auto* e : {&e1, &e2}) {
    if (!la.contains(e->first) || !lb.contains(e->second)) {
      return fail("connector [" + e->first + ", " + e->second + "] does not run from the first piece to the second");
    }
    if (!g.has_edge(e->first, e->second)) return fail("connector [" + e->first + ", " + e->second + "] is not an edge");
  }
  if (e1.first == e2.first || e1.second == e2.second) return fail("connectors are not disjoint");
  if (!lines_skew(g.point(g.index_of(e1.first)), g.point(g.index_of(e1.second)), g.point(g.index_of(e2.first)),
                  g.point(g.index_of(e2.second)))) {
    return fail("connector lines are not skew");
  }
  return ok();
}

CheckResult verify_certificate(const Certificate& cert, const VPolytope& p) {
  if (!p.full_dimensional()) return fail("polytope is not full-dimensional");
  try {
    require_irredundant(p);
    const Hull h = convex_hull(p);
    const IncidenceMatrix& inc = h.incidence;
    const GeometricGraph g = skeleton(p);
    switch (cert.kind) {
      case CertificateKind::ChainCoversVertices:
        if (!verify_triangular_chain(g, cert.chain, ChainMode::CoverVertices, inc)) {
          return fail("chain is invalid or misses a vertex");
        }
        return ok();
      case CertificateKind::SubgraphTouchesFacets: {
        if (!verify_triangular_chain(g, cert.chain, ChainMode::TouchFacets, inc)) {
          return fail("chain is invalid or misses a facet");
        }
        const auto chain_labels = labels_of(cert.chain);
        std::set<std::size_t> listed;
        for (const auto& [f, label] : cert.touches) {
          if (f >= inc.num_facets()) return fail("facet index " + std::to_string(f) + " out of range");
          if (!chain_labels.contains(label)) return fail("touch vertex '" + label + "' is not in the chain");
          if (!inc.incident(p.index_of(label), f)) {
            return fail("vertex '" + label + "' is not on facet " + std::to_string(f));
          }
          listed.insert(f);
        }
        if (listed.size() != inc.num_facets()) return fail("facet coverage map is incomplete");
        return ok();
      }
      case CertificateKind::SkewGluing: {
        if (cert.pieces.size() != 2 || cert.connectors.size() != 2) return fail("skew gluing needs two pieces and two connectors");
        const CheckResult r = verify_skew_gluing(cert.pieces[0], cert.pieces[1], cert.connectors[0], cert.connectors[1], g);
        if (!r) return r;
        auto all = labels_of(cert.pieces[0]);
        const auto second = labels_of(cert.pieces[1]);
        all.insert(second.begin(), second.end());
        const auto missed = untouched_facets(inc, all);
        if (!missed.empty()) return fail("glued subgraph misses facet " + std::to_string(missed.front()));
        return ok();
      }
      case CertificateKind::RankWitness:
        return verify_rank_witness(cert.space, p, g);
      case CertificateKind::SummandPair: {
        if (!cert.summands) return fail("summand pair missing");
        const auto& [q, r] = *cert.summands;
        if (!minkowski_sum_equals(q, r, p)) return fail("summands do not add up to the polytope");
        if (homothetic(p, q) || homothetic(p, r)) return fail("a summand is homothetic to the polytope");
        return ok();
      }
    }
  } catch (const PreconditionError& e) {
    return fail(e.what());
  }
  return fail("unknown certificate kind");
}

Certificate certify_indecomposable(const VPolytope& p, std::size_t budget) {
  const DecompositionVerdict verdict = is_decomposable(p);
  if (verdict.decomposable) throw DecomposableInput(verdict.space);

  const Hull h = convex_hull(p);
  const IncidenceMatrix& inc = h.incidence;
  const GeometricGraph g = skeleton(p);
  const std::size_t d = p.dim();

  auto checked = [&](Certificate c) {
    const CheckResult r = verify_certificate(c, p);
    if (!r) throw InternalError("generated " + to_string(c.kind) + " certificate failed verification: " + r.reason);
    return c;
  };

  if (p.size() < 2 * d) {
    if (auto chain = find_triangular_chain(g, ChainMode::CoverVertices, inc, budget)) {
      Certificate c;
      c.kind = CertificateKind::ChainCoversVertices;
      c.chain = std::move(*chain);
      return checked(std::move(c));
    }
  }

  if (auto chain = find_triangular_chain(g, ChainMode::TouchFacets, inc, budget)) {
    Certificate c;
    c.kind = CertificateKind::SubgraphTouchesFacets;
    const auto labels = labels_of(*chain);
    for (std::size_t f = 0; f < inc.num_facets(); ++f) {
      for (auto v : inc.facets[f].indices()) {
        if (labels.contains(p.label(v))) {
          c.touches.emplace_back(f, p.label(v));
          break;
        }
      }
    }
    c.chain = std::move(*chain);
    return checked(std::move(c));
  }

  const auto pieces = triangle_components(g, budget);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto la = labels_of(pieces[i]);
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const auto lb = labels_of(pieces[j]);
      if (std::any_of(la.begin(), la.end(), [&](const std::string& l) { return lb.contains(l); })) continue;
      auto both = la;
      both.insert(lb.begin(), lb.end());
      if (!untouched_facets(inc, both).empty()) continue;

      std::vector<LabelEdge> connectors;
      for (const auto& [u, v] : g.edges()) {
        if (la.contains(g.label(u)) && lb.contains(g.label(v))) connectors.emplace_back(g.label(u), g.label(v));
        if (la.contains(g.label(v)) && lb.contains(g.label(u))) connectors.emplace_back(g.label(v), g.label(u));
      }
      auto key = [&](const LabelEdge& e) {
        const Vector& x = p.point(e.first);
        const Vector& y = p.point(e.second);
        return lex_less(y, x) ? std::make_pair(y, x) : std::make_pair(x, y);
      };
      std::sort(connectors.begin(), connectors.end(), [&](const LabelEdge& a, const LabelEdge& b) {
        const auto ka = key(a), kb = key(b);
        if (ka.first != kb.first) return lex_less(ka.first, kb.first);
        return lex_less(ka.second, kb.second);
      });
      for (std::size_t x = 0; x < connectors.size(); ++x) {
        for (std::size_t y = x + 1; y < connectors.size(); ++y) {
          const auto& e1 = connectors[x];
          const auto& e2 = connectors[y];
          if (e1.first == e2.first || e1.second == e2.second) continue;
          if (!lines_skew(p.point(e1.first), p.point(e1.second), p.point(e2.first), p.point(e2.second))) continue;
          Certificate c;
          c.kind = CertificateKind::SkewGluing;
          c.pieces = {pieces[i], pieces[j]};
          c.connectors = {e1, e2};
          return checked(std::move(c));
        }
      }
    }
  }

  Certificate c;
  c.kind = CertificateKind::RankWitness;
  c.space = verdict.space;
  return checked(std::move(c));
}

Certificate certify(const VPolytope& p, std::size_t budget) {
  try {
    return certify_indecomposable(p, budget);
  } catch (const DecomposableInput&) {
    Certificate c;
    c.kind = CertificateKind::SummandPair;
    c.summands = extract_summands(p);
    return c;
  }
}

}  // namespace polyforge
