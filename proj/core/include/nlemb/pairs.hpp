#pragma once

#include "nlemb/types.hpp"

#include <cstdint>

namespace nlemb {

/// Number of distinct same-class index pairs for these labels.
std::uint64_t count_positive_pairs(const LabelVector& labels);

/// Number of distinct cross-class index pairs for these labels.
std::uint64_t count_negative_pairs(const LabelVector& labels);

/// Sample similar/dissimilar index pairs from class labels.
///
/// Draws uniformly with replacement, separately from the pool of same-class
/// pairs (y = +1) and the pool of cross-class pairs (y = -1). The total is
/// capped at the number of distinct pairs available; within the total,
/// pos_fraction sets the positive share. Deterministic given seed.
///
/// Throws NoPositivePairs when no class has two members and NoNegativePairs
/// when only one class exists.
PairSet generate_pairs(const LabelVector& labels, std::size_t budget, double pos_fraction,
                       std::uint64_t seed);

}  // namespace nlemb
