#pragma once

#include <span>
#include <vector>

#include "dlat/lattice.hpp"

namespace dlat {

/// Every v in the lattice spanned by the rows of `basis` with
/// ||y - v||^2 <= radius^2 + 1e-9, sorted. The rows must have pairwise
/// distinct leading columns (a permuted upper-triangular basis).
std::vector<IntVec> enumerate_ball(const IntMatrix& basis, std::span<const double> y, double radius);
/// Same result; subtrees below a shallow frontier are searched in parallel.
std::vector<IntVec> enumerate_ball_parallel(const IntMatrix& basis, std::span<const double> y, double radius);

/// Exhaustive ground truth for lattices of dimension <= 16.
std::vector<IntVec> enumeration_oracle(const ConstructionDLattice& lat, std::span<const double> y, double radius,
                                       bool parallel = true);

}  // namespace dlat
