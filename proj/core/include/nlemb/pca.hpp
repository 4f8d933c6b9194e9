#pragma once

#include "nlemb/types.hpp"

#include <span>

namespace nlemb {

/// Mean vector plus top-d principal directions (orthonormal rows, descending
/// explained variance). Sign-canonicalized: each component's
/// largest-magnitude entry is positive.
struct PcaModel {
    Vector mean;
    Matrix components;          // d x D
    Vector explained_variance;  // length d, non-increasing
    Index rank = 0;             // number of nonzero-variance directions found

    Index dim() const { return components.rows(); }
    Index input_dim() const { return components.cols(); }
};

/// Fits PCA on mean-centered rows. Uses the N x N Gram route when N < D,
/// otherwise the D x D covariance route. If the data has fewer than d
/// directions of nonzero variance the model pads with zero variance and
/// records the achieved rank.
PcaModel fit_pca(const FeatureMatrix& features, Index d);

/// components * (x - mean).
Vector project_pca(const PcaModel& model, std::span<const double> x);

}  // namespace nlemb
