#include <algorithm>
#include <map>
#include <set>

#include "polyforge/decomp.hpp"

namespace polyforge {

namespace {

using Triangle = std::array<std::size_t, 3>;

struct BudgetExceeded {};

std::vector<Triangle> triangles_of(const GeometricGraph& g) {
  std::vector<Triangle> out;
  for (const auto& [i, j] : g.edges()) {
    VertexSet common = g.neighbors(i);
    common &= g.neighbors(j);
    for (auto k : common.indices()) {
      if (k <= j) continue;
      if (affine_dimension({g.point(i), g.point(j), g.point(k)}) == 2) out.push_back({i, j, k});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t shared(const Triangle& a, const Triangle& b) {
  std::size_t n = 0;
  for (auto x : a) n += std::count(b.begin(), b.end(), x);
  return n;
}

std::vector<std::vector<std::size_t>> triangle_adjacency(const std::vector<Triangle>& tris) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_edge;
  for (std::size_t t = 0; t < tris.size(); ++t) {
    const auto& [a, b, c] = tris[t];
    by_edge[{a, b}].push_back(t);
    by_edge[{a, c}].push_back(t);
    by_edge[{b, c}].push_back(t);
  }
  std::vector<std::vector<std::size_t>> adj(tris.size());
  for (const auto& [edge, ts] : by_edge) {
    for (auto s : ts) {
      for (auto t : ts) {
        if (s != t) adj[s].push_back(t);
      }
    }
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

// Depth-first walk over edge-adjacent triangles. The walk returns to the
// parent after each child subtree that added coverage and drops subtrees that
// added none, so consecutive entries always share an edge.
class ChainWalker {
 public:
  ChainWalker(const std::vector<std::vector<std::size_t>>& adj, std::vector<VertexSet> elements, VertexSet target,
              std::size_t budget)
      : adj_(adj), elements_(std::move(elements)), target_(std::move(target)), budget_(budget),
        visited_(adj.size(), false), covered_(target_.size()) {}

  void reset() { covered_ = VertexSet(target_.size()); }

  // Walk from `start`; true once the coverage reaches the target.
  bool run(std::size_t start) {
    walk_.clear();
    done_ = false;
    visit(start);
    return done_;
  }

  const std::vector<std::size_t>& walk() const { return walk_; }
  bool visited(std::size_t t) const { return visited_[t]; }

  std::size_t gain(std::size_t t) const {
    VertexSet fresh = elements_[t];
    fresh &= target_;
    std::size_t n = 0;
    for (auto x : fresh.indices()) n += covered_.test(x) ? 0 : 1;
    return n;
  }

 private:
  bool visit(std::size_t t) {
    if (++expansions_ > budget_) throw BudgetExceeded{};
    visited_[t] = true;
    bool contributed = gain(t) > 0;
    covered_ |= elements_[t];
    walk_.push_back(t);
    if (target_.is_subset_of(covered_)) {
      done_ = true;
      return true;
    }
    for (;;) {
      std::optional<std::size_t> next;
      std::size_t best = 0;
      for (auto s : adj_[t]) {
        if (visited_[s]) continue;
        const std::size_t gs = gain(s);
        if (!next || gs > best) {
          next = s;
          best = gs;
        }
      }
      if (!next) break;
      const std::size_t mark = walk_.size();
      const bool child = visit(*next);
      if (done_) return true;
      if (child) {
        walk_.push_back(t);
        contributed = true;
      } else {
        walk_.resize(mark);
      }
    }
    return contributed;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<VertexSet> elements_;
  VertexSet target_;
  std::size_t budget_;
  std::size_t expansions_ = 0;
  std::vector<bool> visited_;
  VertexSet covered_;
  std::vector<std::size_t> walk_;
  bool done_ = false;
};

TriangularChain to_chain(const GeometricGraph& g, const std::vector<Triangle>& tris,
                         const std::vector<std::size_t>& walk) {
  TriangularChain chain;
  for (auto t : walk) chain.triangles.push_back({g.label(tris[t][0]), g.label(tris[t][1]), g.label(tris[t][2])});
  return chain;
}

// Per-triangle coverage sets in the mode's element space.
std::vector<VertexSet> coverage_sets(const GeometricGraph& g, const std::vector<Triangle>& tris, ChainMode mode,
                                     const IncidenceMatrix& inc, VertexSet& target) {
  std::vector<VertexSet> out;
  if (mode == ChainMode::CoverVertices) {
    target = VertexSet::full(g.size());
    for (const auto& t : tris) {
      VertexSet s(g.size());
      for (auto v : t) s.set(v);
      out.push_back(std::move(s));
    }
    return out;
  }
  std::vector<std::size_t> row(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto it = std::find(inc.vertex_labels.begin(), inc.vertex_labels.end(), g.label(v));
    if (it == inc.vertex_labels.end()) throw PreconditionError("vertex '" + g.label(v) + "' missing from incidence");
    row[v] = static_cast<std::size_t>(it - inc.vertex_labels.begin());
  }
  target = VertexSet::full(inc.num_facets());
  for (const auto& t : tris) {
    VertexSet s(inc.num_facets());
    for (std::size_t f = 0; f < inc.num_facets(); ++f) {
      for (auto v : t) {
        if (inc.incident(row[v], f)) s.set(f);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<std::string> TriangularChain::vertex_labels() const {
  std::set<std::string> all;
  for (const auto& t : triangles) all.insert(t.begin(), t.end());
  return {all.begin(), all.end()};
}

bool verify_triangular_chain(const GeometricGraph& g, const TriangularChain& chain, ChainMode mode,
                             const IncidenceMatrix& inc) {
  if (chain.triangles.empty()) return false;
  std::vector<Triangle> tris;
  for (const auto& t : chain.triangles) {
    Triangle idx{g.index_of(t[0]), g.index_of(t[1]), g.index_of(t[2])};
    if (idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2]) return false;
    if (!g.has_edge(idx[0], idx[1]) || !g.has_edge(idx[0], idx[2]) || !g.has_edge(idx[1], idx[2])) return false;
    if (affine_dimension({g.point(idx[0]), g.point(idx[1]), g.point(idx[2])}) != 2) return false;
    tris.push_back(idx);
  }
  for (std::size_t i = 0; i + 1 < tris.size(); ++i) {
    if (shared(tris[i], tris[i + 1]) != 2) return false;
  }
  VertexSet used(g.size());
  for (const auto& t : tris) {
    for (auto v : t) used.set(v);
  }
  if (mode == ChainMode::CoverVertices) return used.count() == g.size();

  for (const auto& f : inc.facets) {
    bool touched = false;
    for (auto v : used.indices()) {
      const auto it = std::find(inc.vertex_labels.begin(), inc.vertex_labels.end(), g.label(v));
      if (it == inc.vertex_labels.end()) throw PreconditionError("chain vertex '" + g.label(v) + "' missing from incidence");
      if (f.test(static_cast<std::size_t>(it - inc.vertex_labels.begin()))) {
        touched = true;
        break;
      }
    }
    if (!touched) return false;
  }
  return true;
}

std::optional<TriangularChain> find_triangular_chain(const GeometricGraph& g, ChainMode mode,
                                                     const IncidenceMatrix& inc, std::size_t budget) {
  const auto tris = triangles_of(g);
  if (tris.empty()) return std::nullopt;
  const auto adj = triangle_adjacency(tris);
  VertexSet target;
  auto elements = coverage_sets(g, tris, mode, inc, target);
  ChainWalker walker(adj, std::move(elements), target, budget);
  try {
    for (std::size_t seed = 0; seed < tris.size(); ++seed) {
      if (walker.visited(seed)) continue;
      // Start each component at its highest-gain triangle.
      std::vector<std::size_t> component{seed};
      std::vector<bool> in(tris.size(), false);
      in[seed] = true;
      for (std::size_t i = 0; i < component.size(); ++i) {
        for (auto s : adj[component[i]]) {
          if (!in[s]) {
            in[s] = true;
            component.push_back(s);
          }
        }
      }
      walker.reset();
      std::size_t start = seed;
      for (auto t : component) {
        if (walker.gain(t) > walker.gain(start) || (walker.gain(t) == walker.gain(start) && t < start)) start = t;
      }
      if (walker.run(start)) return to_chain(g, tris, walker.walk());
    }
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<TriangularChain> triangle_components(const GeometricGraph& g, std::size_t budget) {
  const auto tris = triangles_of(g);
  const auto adj = triangle_adjacency(tris);
  std::vector<TriangularChain> out;
  std::vector<bool> seen(tris.size(), false);
  for (std::size_t seed = 0; seed < tris.size(); ++seed) {
    if (seen[seed]) continue;
    std::vector<std::size_t> component{seed};
    seen[seed] = true;
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (auto s : adj[component[i]]) {
        if (!seen[s]) {
          seen[s] = true;
          component.push_back(s);
        }
      }
    }
    VertexSet target(g.size());
    for (auto t : component) {
      for (auto v : tris[t]) target.set(v);
    }
    std::vector<VertexSet> elements;
    for (const auto& t : tris) {
      VertexSet s(g.size());
      for (auto v : t) s.set(v);
      elements.push_back(std::move(s));
    }
    ChainWalker walker(adj, std::move(elements), target, budget);
    try {
      if (!walker.run(seed)) throw InternalError("triangle component walk did not cover its vertices");
    } catch (const BudgetExceeded&) {
      continue;
    }
    out.push_back(to_chain(g, tris, walker.walk()));
  }
  return out;
}

}  // namespace polyforge
