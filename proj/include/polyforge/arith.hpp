#pragma once

// Exact rational linear algebra.
//
// Scalars are GMP rationals kept in lowest terms. Elimination routines work on
// rows scaled to primitive integer vectors so that intermediate entries stay
// integral; pivots are taken at the first nonzero column in order.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace polyforge {

using Scalar = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;
using IntVector = std::vector<Integer>;

/// Parses "p/q" or "p" (optional leading sign). Throws ParseError.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
bool lex_less(const Vector& a, const Vector& b);

/// Multiplies by the lcm of denominators and divides by the gcd of
/// numerators; the result is a positive multiple of v.
IntVector primitive_integer(const Vector& v);
IntVector primitive_integer(const IntVector& v);
Vector to_rational(const IntVector& v);

/// Row echelon form over the integers. `rows[i]` has its leading nonzero
/// entry at `pivots[i]`; pivots are strictly increasing.
struct Echelon {
  std::size_t columns = 0;
  std::vector<IntVector> rows;
  std::vector<std::size_t> pivots;
};

Echelon echelon(const Matrix& rows, std::size_t columns);

/// Rank of the row space. Throws PreconditionError on ragged input.
std::size_t rank(const Matrix& rows);
std::size_t rank(const Matrix& rows, std::size_t columns);

/// Basis of the right kernel, one primitive integer vector per free column.
std::vector<Vector> nullspace(const Matrix& rows);
std::vector<Vector> nullspace(const Matrix& rows, std::size_t columns);

/// Inverse of a square matrix, or an empty matrix if singular.
Matrix inverse(const Matrix& m);

/// Dimension of the affine hull of the points (-1 for no points).
int affine_dimension(const std::vector<Vector>& points);

/// True iff the lines aff(a1,b1) and aff(a2,b2) neither meet nor are
/// parallel. Throws PreconditionError if a line is degenerate.
bool lines_skew(const Vector& a1, const Vector& b1, const Vector& a2, const Vector& b2);
bool lines_parallel(const Vector& a1, const Vector& b1, const Vector& a2, const Vector& b2);
bool lines_coplanar(const Vector& a1, const Vector& b1, const Vector& a2, const Vector& b2);

/// The hyperplane normal . x = offset, paired with the closed half-space
/// normal . x >= offset when it bounds a polytope.
struct Hyperplane {
  Vector normal;
  Scalar offset;

  Scalar evaluate(const Vector& x) const { return dot(normal, x) - offset; }
  bool contains(const Vector& x) const { return evaluate(x) == 0; }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Coprime integer entries, positive rescaling only (keeps the half-space).
Hyperplane canonical_oriented(const Hyperplane& h);
/// Coprime integer entries with the first nonzero normal entry positive.
Hyperplane canonical_unoriented(const Hyperplane& h);
bool operator<(const Hyperplane& a, const Hyperplane& b);
/// "a_1 x1 + ... >= c" style rendering for messages.
std::string to_string(const Hyperplane& h);

}  // namespace polyforge
