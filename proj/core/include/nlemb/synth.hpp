#pragma once

#include "nlemb/types.hpp"

#include <cstdint>
#include <utility>

namespace nlemb {

/// Gaussian-perturbed prototype histograms, one prototype per class.
///
/// Each class owns the coordinates congruent to its id modulo `classes`;
/// owned coordinates carry weight 1 + separation before perturbation, others
/// weight 1. Samples are clipped at zero and l1-normalized, so large
/// separation gives classes with disjoint dominant support. Deterministic
/// given seed.
std::pair<FeatureMatrix, LabelVector> synth_blobs(Index classes, Index per_class, Index dims,
                                                  double separation, std::uint64_t seed);

/// Two classes on the probability simplex that no linear functional separates.
///
/// Rows are softmax(g / T) for standard normal g; the temperature T sets the
/// row's entropy. Class 1 draws from a mid-entropy band while class 0 mixes
/// low- and high-entropy draws, so class 1 forms a shell between the two
/// class-0 populations. Deterministic given seed.
std::pair<FeatureMatrix, LabelVector> synth_nonlinear(Index classes, Index per_class, Index dims,
                                                      std::uint64_t seed);

}  // namespace nlemb
