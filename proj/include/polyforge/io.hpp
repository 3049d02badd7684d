#pragma once

// Line-oriented text formats with exact rationals, JSON certificates and
// isomorphism maps.
//
//   vpoly <d> <n>            hpoly <d> <m>
//   <label> <x_1> .. <x_d>   <a_1> .. <a_d> <c>      (a . x >= c)
//
// Lines starting with '#' are comments.

#include <string>
#include <string_view>

#include "polyforge/decomp.hpp"
#include "polyforge/equiv.hpp"
#include "polyforge/polytope.hpp"

namespace polyforge {

/// Errors carry the 1-based line number.
VPolytope parse_vpoly(std::string_view text);
std::string emit_vpoly(const VPolytope& p);

/// Rows are canonicalized on emit.
HPolytope parse_hpoly(std::string_view text);
std::string emit_hpoly(const HPolytope& h);

/// "a_1,...,a_d"
Vector parse_vector(std::string_view text);
/// "a_1,...,a_d=c", the hyperplane a . x = c.
Hyperplane parse_hyperplane(std::string_view text);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(std::string_view text);

std::string isomorphism_to_json(const LatticeIsomorphism& iso);

std::string read_file(const std::string& path);
/// Writes through a temporary file in the same directory and renames it into
/// place, so readers never see a partial file.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace polyforge
