#include "polyforge/double_description.hpp"

#include "polyforge/error.hpp"
#include "polyforge/vertex_set.hpp"

namespace polyforge {

namespace {

struct Ray {
  IntVector y;
  VertexSet zeros;  // processed constraints tight at y
};

Integer eval(const IntVector& a, const IntVector& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(y[i]) != 0) s += a[i] * y[i];
  }
  return s;
}

}  // namespace

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& constraints) {
  if (constraints.empty()) throw PreconditionError("cone without constraints is not pointed");
  const std::size_t n = constraints.front().size();
  const std::size_t m = constraints.size();
  for (const auto& a : constraints) {
    if (a.size() != n) throw PreconditionError("constraint rows have mismatched lengths");
  }

  // Greedy row basis for the starting simplicial cone.
  std::vector<std::size_t> basis;
  Matrix selected;
  std::vector<bool> processed(m, false);
  for (std::size_t i = 0; i < m && basis.size() < n; ++i) {
    selected.push_back(to_rational(constraints[i]));
    if (rank(selected, n) == basis.size() + 1) {
      basis.push_back(i);
      processed[i] = true;
    } else {
      selected.pop_back();
    }
  }
  if (basis.size() < n) throw PreconditionError("constraint system does not define a pointed cone");

  const Matrix inv = inverse(selected);
  std::vector<Ray> rays;
  for (std::size_t col = 0; col < n; ++col) {
    Vector y(n);
    for (std::size_t r = 0; r < n; ++r) y[r] = inv[r][col];
    Ray ray{primitive_integer(y), VertexSet(m)};
    for (auto i : basis) {
      if (sgn(eval(constraints[i], ray.y)) == 0) ray.zeros.set(i);
    }
    rays.push_back(std::move(ray));
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    const IntVector& a = constraints[i];
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = eval(a, rays[r].y);
      const int s = sgn(value[r]);
      if (s > 0) pos.push_back(r);
      else if (s < 0) neg.push_back(r);
    }
    if (neg.empty()) {
      for (auto& ray : rays) {
        if (sgn(eval(a, ray.y)) == 0) ray.zeros.set(i);
      }
      processed[i] = true;
      continue;
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (sgn(value[r]) >= 0) {
        Ray keep = rays[r];
        if (sgn(value[r]) == 0) keep.zeros.set(i);
        next.push_back(std::move(keep));
      }
    }
    for (auto p : pos) {
      for (auto q : neg) {
        VertexSet common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector y(n);
        for (std::size_t k = 0; k < n; ++k) y[k] = value[p] * rays[q].y[k] - value[q] * rays[p].y[k];
        common.set(i);
        next.push_back(Ray{primitive_integer(y), std::move(common)});
      }
    }
    rays = std::move(next);
    processed[i] = true;
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.y));
  return out;
}

}  // namespace polyforge
