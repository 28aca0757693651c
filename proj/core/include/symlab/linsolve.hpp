#pragma once

#include <vector>

#include "symlab/rational.hpp"

namespace symlab {

using RationalMatrix = std::vector<RationalVector>;

// Solves A X = B exactly for an m x k matrix A with m >= k and several
// right-hand sides (B is m x r, returned X is k x r). Rows beyond the pivot
// rows must be consistent with the solution. Throws DegeneracyError when A
// has rank < k or the system is inconsistent.
RationalMatrix solve_exact(RationalMatrix a, RationalMatrix b);

// Single right-hand side convenience wrapper.
RationalVector solve_exact(RationalMatrix a, const RationalVector& b);

// Rank of an exact matrix.
std::size_t exact_rank(RationalMatrix a);

}  // namespace symlab
