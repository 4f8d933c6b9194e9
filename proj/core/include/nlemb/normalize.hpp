#pragma once

#include "nlemb/types.hpp"

namespace nlemb {

/// Divide each row by its entry sum so rows become histograms.
/// Requires non-negative entries and a positive sum per row.
/// Throws NegativeEntry or ZeroRow. Returns the input unchanged when it is
/// already in l1 state, which makes repeated application exact.
FeatureMatrix l1_normalize(const FeatureMatrix& m);

/// Divide each row by its Euclidean norm. Throws ZeroRow on an all-zero row.
FeatureMatrix l2_normalize(const FeatureMatrix& m);

}  // namespace nlemb
