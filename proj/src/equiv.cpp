#include "polyforge/equiv.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <unordered_set>

#include "polyforge/error.hpp"
#include "polyforge/families.hpp"
#include "polyforge/hull.hpp"

namespace polyforge {

namespace {

// Colour refinement state for the two incidence structures being matched.
struct Colouring {
  std::array<std::vector<int>, 2> vertex;
  std::array<std::vector<int>, 2> facet;
};

class IsomorphismSearch {
 public:
  IsomorphismSearch(const IncidenceMatrix& a, const IncidenceMatrix& b) : inc_{&a, &b} {
    for (int s = 0; s < 2; ++s) {
      const auto& m = *inc_[s];
      facet_vertices_[s].resize(m.num_facets());
      vertex_facets_[s].resize(m.num_vertices());
      for (std::size_t f = 0; f < m.num_facets(); ++f) {
        for (auto v : m.facets[f].indices()) {
          facet_vertices_[s][f].push_back(v);
          vertex_facets_[s][v].push_back(f);
        }
      }
    }
    for (const auto& f : b.facets) target_facets_.insert(f);
  }

  std::optional<std::vector<std::size_t>> run() {
    Colouring c;
    for (int s = 0; s < 2; ++s) {
      c.vertex[s].assign(inc_[s]->num_vertices(), 0);
      c.facet[s].assign(inc_[s]->num_facets(), 0);
    }
    return search(std::move(c));
  }

 private:
  // Recolours every element by (own colour, multiset of neighbour colours)
  // until the partition is stable. False if the two sides diverge.
  bool refine(Colouring& c) const {
    std::size_t classes = count_classes(c);
    for (;;) {
      recolour(c.facet, c.vertex, facet_vertices_);
      recolour(c.vertex, c.facet, vertex_facets_);
      if (!balanced(c.vertex) || !balanced(c.facet)) return false;
      const std::size_t next = count_classes(c);
      if (next == classes) return true;
      classes = next;
    }
  }

  static void recolour(std::array<std::vector<int>, 2>& own, const std::array<std::vector<int>, 2>& other,
                       const std::array<std::vector<std::vector<std::size_t>>, 2>& links) {
    std::map<std::vector<int>, int> ids;
    std::array<std::vector<std::vector<int>>, 2> sigs;
    for (int s = 0; s < 2; ++s) {
      for (std::size_t i = 0; i < own[s].size(); ++i) {
        std::vector<int> sig{own[s][i]};
        std::vector<int> around;
        for (auto j : links[s][i]) around.push_back(other[s][j]);
        std::sort(around.begin(), around.end());
        sig.insert(sig.end(), around.begin(), around.end());
        ids.emplace(sig, 0);
        sigs[s].push_back(std::move(sig));
      }
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int s = 0; s < 2; ++s) {
      for (std::size_t i = 0; i < own[s].size(); ++i) own[s][i] = ids.at(sigs[s][i]);
    }
  }

  static bool balanced(const std::array<std::vector<int>, 2>& col) {
    std::map<int, long> balance;
    for (int x : col[0]) ++balance[x];
    for (int x : col[1]) --balance[x];
    return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
  }

  static std::size_t count_classes(const Colouring& c) {
    std::set<int> v(c.vertex[0].begin(), c.vertex[0].end());
    std::set<int> f(c.facet[0].begin(), c.facet[0].end());
    return v.size() + f.size();
  }

  std::optional<std::vector<std::size_t>> search(Colouring c) {
    if (!refine(c)) return std::nullopt;
    const auto& src = c.vertex[0];
    const auto& dst = c.vertex[1];
    std::map<int, std::size_t> class_size;
    for (int x : src) ++class_size[x];

    std::optional<std::size_t> pick;
    for (std::size_t v = 0; v < src.size(); ++v) {
      const auto sz = class_size[src[v]];
      if (sz > 1 && (!pick || sz < class_size[src[*pick]])) pick = v;
    }
    if (!pick) return leaf(c);

    const std::size_t v = *pick;
    const auto& src_labels = inc_[0]->vertex_labels;
    const auto& dst_labels = inc_[1]->vertex_labels;
    const std::string want = base_label(src_labels[v]);
    std::vector<std::size_t> candidates;
    for (std::size_t w = 0; w < dst.size(); ++w) {
      if (dst[w] == src[v]) candidates.push_back(w);
    }
    std::sort(candidates.begin(), candidates.end(), [&](std::size_t x, std::size_t y) {
      const bool mx = base_label(dst_labels[x]) == want;
      const bool my = base_label(dst_labels[y]) == want;
      if (mx != my) return mx;
      return dst_labels[x] < dst_labels[y];
    });

    const int fresh = 1 + std::max(*std::max_element(src.begin(), src.end()), *std::max_element(dst.begin(), dst.end()));
    for (auto w : candidates) {
      Colouring next = c;
      next.vertex[0][v] = fresh;
      next.vertex[1][w] = fresh;
      if (auto found = search(std::move(next))) return found;
    }
    return std::nullopt;
  }

  std::optional<std::vector<std::size_t>> leaf(const Colouring& c) const {
    const std::size_t n = c.vertex[0].size();
    std::map<int, std::size_t> where;
    for (std::size_t w = 0; w < n; ++w) where[c.vertex[1][w]] = w;
    std::vector<std::size_t> perm(n);
    for (std::size_t v = 0; v < n; ++v) perm[v] = where.at(c.vertex[0][v]);
    for (const auto& f : inc_[0]->facets) {
      VertexSet image(n);
      for (auto v : f.indices()) image.set(perm[v]);
      if (!target_facets_.contains(image)) return std::nullopt;
    }
    return perm;
  }

  std::array<const IncidenceMatrix*, 2> inc_;
  std::array<std::vector<std::vector<std::size_t>>, 2> facet_vertices_;
  std::array<std::vector<std::vector<std::size_t>>, 2> vertex_facets_;
  std::unordered_set<VertexSet, VertexSetHash> target_facets_;
};

std::set<std::string> label_set(const VertexSet& s, const std::vector<std::string>& labels) {
  std::set<std::string> out;
  for (auto v : s.indices()) out.insert(labels[v]);
  return out;
}

}  // namespace

const std::string& LatticeIsomorphism::image(std::string_view label) const {
  for (const auto& [from, to] : vertex_map) {
    if (from == label) return to;
  }
  throw PreconditionError("label '" + std::string(label) + "' not in isomorphism");
}

LatticeIsomorphism LatticeIsomorphism::inverse() const {
  LatticeIsomorphism inv;
  for (const auto& [from, to] : vertex_map) inv.vertex_map.emplace_back(to, from);
  for (const auto& [from, to] : facet_map) inv.facet_map.emplace_back(to, from);
  std::sort(inv.facet_map.begin(), inv.facet_map.end());
  return inv;
}

std::string base_label(std::string_view label) {
  while (!label.empty() && label.back() == '\'') label.remove_suffix(1);
  return std::string(label);
}

std::optional<std::vector<std::size_t>> incidence_isomorphism(const IncidenceMatrix& a, const IncidenceMatrix& b) {
  if (a.dim != b.dim || a.num_vertices() != b.num_vertices() || a.num_facets() != b.num_facets()) {
    return std::nullopt;
  }
  if (a.num_vertices() == 0) return std::vector<std::size_t>{};
  return IsomorphismSearch(a, b).run();
}

std::optional<LatticeIsomorphism> combinatorially_equivalent(const VPolytope& p1, const VPolytope& p2) {
  if (p1.affine_dim() != p2.affine_dim() || p1.size() != p2.size()) return std::nullopt;
  if (p1.affine_dim() <= 0) {
    LatticeIsomorphism iso;
    for (std::size_t i = 0; i < p1.size(); ++i) iso.vertex_map.emplace_back(p1.label(i), p2.label(i));
    return iso;
  }
  const VPolytope q1 = intrinsic(p1);
  const VPolytope q2 = intrinsic(p2);
  const Hull h1 = convex_hull(q1);
  const Hull h2 = convex_hull(q2);
  for (const Hull* h : {&h1, &h2}) {
    const auto bad = h->redundant_labels();
    if (!bad.empty()) throw PreconditionError("point '" + bad.front() + "' is not a vertex of the hull");
  }
  const auto perm = incidence_isomorphism(h1.incidence, h2.incidence);
  if (!perm) return std::nullopt;

  LatticeIsomorphism iso;
  for (std::size_t v = 0; v < perm->size(); ++v) iso.vertex_map.emplace_back(p1.label(v), p2.label((*perm)[v]));
  for (std::size_t f = 0; f < h1.incidence.num_facets(); ++f) {
    VertexSet image(p1.size());
    for (auto v : h1.incidence.facets[f].indices()) image.set((*perm)[v]);
    const auto& targets = h2.incidence.facets;
    const auto it = std::find(targets.begin(), targets.end(), image);
    iso.facet_map.emplace_back(f, static_cast<std::size_t>(it - targets.begin()));
  }
  return iso;
}

std::optional<HomothetyWitness> homothetic(const VPolytope& p1, const VPolytope& p2) {
  if (p1.dim() != p2.dim() || p1.size() != p2.size() || p1.size() == 0) return std::nullopt;
  // x -> lambda x + t with lambda > 0 preserves lexicographic order, so the
  // sorted vertex lists must correspond entry by entry.
  auto a = p1.points();
  auto b = p2.points();
  std::sort(a.begin(), a.end(), lex_less);
  std::sort(b.begin(), b.end(), lex_less);

  Scalar ratio = 1;
  if (a.size() > 1) {
    const Vector da = a.back() - a.front();
    const Vector db = b.back() - b.front();
    const auto k = static_cast<std::size_t>(
        std::find_if(da.begin(), da.end(), [](const Scalar& x) { return sgn(x) != 0; }) - da.begin());
    if (k == da.size()) return std::nullopt;
    ratio = db[k] / da[k];
    if (sgn(ratio) <= 0) return std::nullopt;
  }
  const Vector shift = b.front() - ratio * a.front();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ratio * a[i] + shift != b[i]) return std::nullopt;
  }
  return HomothetyWitness{ratio, shift};
}

Lemma1Report verify_lemma1(const VPolytope& p, const Vector& a, const Scalar& k) {
  if (sgn(k) <= 0 || k == 1) throw PreconditionError("lemma check needs k > 0 and k != 1");
  const VPolytope p1 = segment_sum(p, a, Scalar(1));
  const VPolytope p2 = segment_sum(p, a, k);

  Lemma1Report report;
  report.vertices = p1.size();
  if (!combinatorially_equivalent(p1, p2)) report.failures.push_back("no lattice isomorphism between the two sums");

  const auto l1 = p1.labels();
  const auto l2 = p2.labels();
  if (std::set<std::string>(l1.begin(), l1.end()) != std::set<std::string>(l2.begin(), l2.end())) {
    report.failures.push_back("vertex sets do not correspond (q <-> q, q+a <-> q+ka)");
  }

  const auto near_labels = p.labels();
  const std::set<std::string> near(near_labels.begin(), near_labels.end());
  const Hull h1 = convex_hull(p1);
  const Hull h2 = convex_hull(p2);
  std::set<std::set<std::string>> targets;
  for (const auto& f : h2.incidence.facets) targets.insert(label_set(f, l2));

  for (const auto& f : h1.incidence.facets) {
    const auto labels = label_set(f, l1);
    const auto n_near = static_cast<std::size_t>(
        std::count_if(labels.begin(), labels.end(), [&](const std::string& s) { return near.contains(s); }));
    if (n_near == labels.size()) ++report.near_facets;
    else if (n_near == 0) ++report.far_facets;
    else ++report.side_facets;
    if (!targets.contains(labels)) {
      std::string desc;
      for (const auto& s : labels) desc += (desc.empty() ? "" : ",") + s;
      report.failures.push_back("facet {" + desc + "} of P+[0,a] has no counterpart in P+[0,ka]");
    }
  }
  if (h1.incidence.num_facets() != h2.incidence.num_facets()) {
    report.failures.push_back("facet counts differ: " + std::to_string(h1.incidence.num_facets()) + " vs " +
                              std::to_string(h2.incidence.num_facets()));
  }
  report.passed = report.failures.empty();
  return report;
}

}  // namespace polyforge
