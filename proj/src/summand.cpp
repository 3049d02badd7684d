#include <algorithm>

#include "polyforge/decomp.hpp"
#include "polyforge/equiv.hpp"
#include "polyforge/families.hpp"
#include "polyforge/hull.hpp"

namespace polyforge {

namespace {

std::size_t first_nonzero(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) return i;
  }
  return v.size();
}

Vector flatten(const std::vector<Vector>& field) {
  Vector out;
  for (const auto& x : field) out.insert(out.end(), x.begin(), x.end());
  return out;
}

// Coefficient t_e with f(u) - f(v) = t_e (u - v).
Scalar edge_coefficient(const std::vector<Vector>& f, const GeometricGraph& g, const Edge& e) {
  const Vector delta = g.point(e.first) - g.point(e.second);
  const Vector df = f[e.first] - f[e.second];
  const std::size_t k = first_nonzero(delta);
  return df[k] / delta[k];
}

}  // namespace

Matrix summand_constraints(const GeometricGraph& g, std::size_t d) {
  const std::size_t n = g.size();
  Matrix rows;
  for (const auto& [u, v] : g.edges()) {
    if (g.point(u).size() != d || g.point(v).size() != d) {
      throw PreconditionError("graph points do not live in Q^" + std::to_string(d));
    }
    const Vector delta = g.point(u) - g.point(v);
    const std::size_t k = first_nonzero(delta);
    if (k == d) throw PreconditionError("edge {" + g.label(u) + ", " + g.label(v) + "} has equal endpoints");
    // (df)_j delta_k - (df)_k delta_j = 0 for j != k
    for (std::size_t j = 0; j < d; ++j) {
      if (j == k) continue;
      Vector row = zero_vector(n * d);
      row[u * d + j] += delta[k];
      row[v * d + j] -= delta[k];
      row[u * d + k] -= delta[j];
      row[v * d + k] += delta[j];
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

SummandSpace summand_space(const GeometricGraph& g, std::size_t d) {
  if (g.size() == 0) throw PreconditionError("empty graph");
  if (!g.connected()) throw PreconditionError("graph is disconnected");
  const std::size_t n = g.size();
  SummandSpace space;
  space.ambient_dim = d;
  for (std::size_t i = 0; i < n; ++i) space.labels.push_back(g.label(i));
  for (const auto& x : nullspace(summand_constraints(g, d), n * d)) {
    std::vector<Vector> field;
    for (std::size_t v = 0; v < n; ++v) field.emplace_back(x.begin() + v * d, x.begin() + (v + 1) * d);
    space.basis.push_back(std::move(field));
  }
  return space;
}

DecompositionVerdict is_decomposable(const VPolytope& p) {
  if (!p.full_dimensional()) throw PreconditionError("decomposability needs a full-dimensional polytope");
  DecompositionVerdict out;
  out.space = summand_space(skeleton(p), p.dim());
  out.decomposable = out.space.dimension() > p.dim() + 1;
  return out;
}

SummandPair extract_summands(const VPolytope& p) {
  const DecompositionVerdict verdict = is_decomposable(p);
  if (!verdict.decomposable) throw PreconditionError("polytope is indecomposable");
  const std::size_t n = p.size();
  const std::size_t d = p.dim();
  const GeometricGraph g = skeleton(p);

  // Trivial fields: translations and the identity.
  Matrix trivial;
  for (std::size_t j = 0; j < d; ++j) trivial.push_back(flatten(std::vector<Vector>(n, unit_vector(d, j))));
  trivial.push_back(flatten(p.points()));
  const std::size_t base_rank = rank(trivial, n * d);

  const std::vector<Vector>* field = nullptr;
  for (const auto& f : verdict.space.basis) {
    Matrix extended = trivial;
    extended.push_back(flatten(f));
    if (rank(extended, n * d) > base_rank) {
      field = &f;
      break;
    }
  }
  if (field == nullptr) throw InternalError("no summand field outside the trivial span");

  std::vector<Scalar> coeffs;
  for (const auto& e : g.edges()) coeffs.push_back(edge_coefficient(*field, g, e));
  const Scalar lo = *std::min_element(coeffs.begin(), coeffs.end());
  const Scalar hi = *std::max_element(coeffs.begin(), coeffs.end());
  if (lo == hi) throw InternalError("summand field has constant edge coefficients");

  // g = (f - lo * id) / (hi - lo) has edge coefficients in [0, 1].
  std::vector<Vector> scaled(n);
  for (std::size_t v = 0; v < n; ++v) scaled[v] = Scalar(1 / (hi - lo)) * ((*field)[v] - lo * p.point(v));
  const Vector anchor = scaled[0];
  std::vector<LabeledPoint> qs, rs;
  for (std::size_t v = 0; v < n; ++v) {
    const Vector gv = scaled[v] - anchor;
    qs.push_back({p.label(v), gv});
    rs.push_back({p.label(v), p.point(v) - gv});
  }
  SummandPair out{hull_vertices(d, std::move(qs)), hull_vertices(d, std::move(rs))};

  if (!minkowski_sum_equals(out.q, out.r, p)) throw InternalError("extracted summands do not add up to the input");
  if (homothetic(p, out.q) || homothetic(p, out.r)) throw InternalError("extracted summand is homothetic to the input");
  return out;
}

}  // namespace polyforge
