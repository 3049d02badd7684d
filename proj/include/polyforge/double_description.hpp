#pragma once

#include <vector>

#include "polyforge/arith.hpp"

namespace polyforge {

/// Extreme rays of the pointed cone { y : a . y >= 0 for every row a },
/// computed by the double description method with the combinatorial
/// adjacency test. Rays are primitive integer vectors. Throws
/// PreconditionError if the rows do not have full column rank (cone not
/// pointed).
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& constraints);

}  // namespace polyforge
