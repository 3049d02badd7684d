#include "polyforge/arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "polyforge/error.hpp"

namespace polyforge {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

void check_rows(const Matrix& rows, std::size_t columns) {
  for (const auto& r : rows) {
    if (r.size() != columns) {
      throw PreconditionError("matrix rows have mismatched lengths");
    }
  }
}

// Eliminates every pivot of `e` from `r` in place.
void reduce(const Echelon& e, IntVector& r) {
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    const std::size_t p = e.pivots[k];
    if (sgn(r[p]) == 0) continue;
    const IntVector& row = e.rows[k];
    Integer g;
    mpz_gcd(g.get_mpz_t(), row[p].get_mpz_t(), r[p].get_mpz_t());
    const Integer a = row[p] / g;
    const Integer b = r[p] / g;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j < p || sgn(row[j]) == 0) {
        if (sgn(r[j]) != 0) r[j] *= a;
      } else {
        r[j] = a * r[j] - b * row[j];
      }
    }
    r = primitive_integer(r);
  }
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    return Scalar(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  const Integer d = parse_integer(den);
  if (sgn(d) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Scalar q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Scalar dot(const Vector& a, const Vector& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

IntVector primitive_integer(const Vector& v) {
  Integer l = 1;
  for (const auto& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[i] = v[i].get_num() * (l / v[i].get_den());
  }
  return primitive_integer(r);
}

IntVector primitive_integer(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return v;
  }
  if (sgn(g) == 0) return v;
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  }
  return r;
}

Vector to_rational(const IntVector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Scalar(v[i]);
  return r;
}

Echelon echelon(const Matrix& rows, std::size_t columns) {
  check_rows(rows, columns);
  Echelon e;
  e.columns = columns;
  for (const auto& row : rows) {
    IntVector r = primitive_integer(row);
    reduce(e, r);
    const auto lead = std::find_if(r.begin(), r.end(), [](const Integer& x) { return sgn(x) != 0; });
    if (lead == r.end()) continue;
    const auto p = static_cast<std::size_t>(lead - r.begin());
    const auto pos = std::lower_bound(e.pivots.begin(), e.pivots.end(), p);
    const auto k = pos - e.pivots.begin();
    e.pivots.insert(pos, p);
    e.rows.insert(e.rows.begin() + k, std::move(r));
    if (e.rows.size() == columns) break;
  }
  return e;
}

std::size_t rank(const Matrix& rows) {
  if (rows.empty()) return 0;
  return rank(rows, rows.front().size());
}

std::size_t rank(const Matrix& rows, std::size_t columns) { return echelon(rows, columns).rows.size(); }

std::vector<Vector> nullspace(const Matrix& rows) {
  if (rows.empty()) throw PreconditionError("nullspace of an empty row list needs a column count");
  return nullspace(rows, rows.front().size());
}

std::vector<Vector> nullspace(const Matrix& rows, std::size_t columns) {
  const Echelon e = echelon(rows, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    Vector x = zero_vector(columns);
    x[f] = 1;
    for (std::size_t k = e.rows.size(); k-- > 0;) {
      const std::size_t p = e.pivots[k];
      const IntVector& row = e.rows[k];
      Scalar s = 0;
      for (std::size_t j = p + 1; j < columns; ++j) {
        if (sgn(row[j]) != 0 && sgn(x[j]) != 0) s += Scalar(row[j]) * x[j];
      }
      x[p] = -s / Scalar(row[p]);
    }
    basis.push_back(to_rational(primitive_integer(x)));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.size();
  check_rows(m, n);
  Matrix a = m;
  Matrix inv(n, zero_vector(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return {};
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Scalar piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      const Scalar f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

int affine_dimension(const std::vector<Vector>& points) {
  if (points.empty()) return -1;
  Matrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(rank(diffs, points[0].size()));
}

namespace {

void check_line(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw PreconditionError("line endpoints differ in dimension");
  if (a == b) throw PreconditionError("degenerate line: equal endpoints");
}

}  // namespace

bool lines_skew(const Vector& a1, const Vector& b1, const Vector& a2, const Vector& b2) {
  check_line(a1, b1);
  check_line(a2, b2);
  return rank({b1 - a1, b2 - a2, a2 - a1}) == 3;
}

bool lines_parallel(const Vector& a1, const Vector& b1, const Vector& a2, const Vector& b2) {
  check_line(a1, b1);
  check_line(a2, b2);
  return rank({b1 - a1, b2 - a2}) == 1;
}

bool lines_coplanar(const Vector& a1, const Vector& b1, const Vector& a2, const Vector& b2) {
  check_line(a1, b1);
  check_line(a2, b2);
  return rank({b1 - a1, b2 - a2, a2 - a1}) <= 2;
}

Hyperplane canonical_oriented(const Hyperplane& h) {
  if (is_zero(h.normal)) throw PreconditionError("hyperplane with zero normal");
  Vector all = h.normal;
  all.push_back(h.offset);
  const IntVector p = primitive_integer(all);
  Hyperplane r;
  r.normal = to_rational(IntVector(p.begin(), p.end() - 1));
  r.offset = Scalar(p.back());
  return r;
}

Hyperplane canonical_unoriented(const Hyperplane& h) {
  Hyperplane r = canonical_oriented(h);
  const auto lead = std::find_if(r.normal.begin(), r.normal.end(), [](const Scalar& x) { return sgn(x) != 0; });
  if (sgn(*lead) < 0) {
    r.normal = -r.normal;
    r.offset = -r.offset;
  }
  return r;
}

bool operator<(const Hyperplane& a, const Hyperplane& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}

std::string to_string(const Hyperplane& h) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < h.normal.size(); ++i) {
    const Scalar& a = h.normal[i];
    if (sgn(a) == 0) continue;
    if (!first) out << (sgn(a) > 0 ? " + " : " - ");
    else if (sgn(a) < 0) out << "-";
    const Scalar m = abs(a);
    if (m != 1) out << m.get_str() << "*";
    out << "x" << (i + 1);
    first = false;
  }
  out << " >= " << h.offset.get_str();
  return out.str();
}

}  // namespace polyforge
