#pragma once

#include "nlemb/kernel.hpp"
#include "nlemb/types.hpp"

#include <span>

namespace nlemb {

/// Embedding by kernel evaluations against d learned landmark vectors.
/// Evaluation cost is O(dD), independent of any training-set size.
struct NonlinearModel {
    Matrix landmarks;  // d x D, one landmark per row
    double bias = 0.1;
    double margin = 0.02;
    KernelId kernel = KernelId::chi2;

    Index dim() const { return landmarks.rows(); }
    Index input_dim() const { return landmarks.cols(); }
    std::span<const double> landmark(Index t) const {
        return {landmarks.data() + t * landmarks.cols(),
                static_cast<std::size_t>(landmarks.cols())};
    }
};

/// Linear projection followed by Euclidean comparison.
struct LinearModel {
    Matrix projection;  // d x D
    double bias = 1.0;
    double margin = 0.2;

    Index dim() const { return projection.rows(); }
    Index input_dim() const { return projection.cols(); }
};

/// Exact kernelized projection: rows are linear combinations of kernel
/// evaluations against every anchor, so evaluation is O(ND + Nd). Kept as a
/// small-N comparison oracle.
struct KernelizedModel {
    Matrix coefficients;  // d x N
    Matrix anchors;       // N x D
    double bias = 0.1;
    double margin = 0.02;
    KernelId kernel = KernelId::chi2;

    Index dim() const { return coefficients.rows(); }
    Index input_dim() const { return anchors.cols(); }
    Index anchor_count() const { return anchors.rows(); }
};

Vector embed(const NonlinearModel& model, std::span<const double> x);
Vector embed(const LinearModel& model, std::span<const double> x);
Vector embed(const KernelizedModel& model, std::span<const double> x);

double squared_distance(const NonlinearModel& model, std::span<const double> xi,
                        std::span<const double> xj);
double squared_distance(const LinearModel& model, std::span<const double> xi,
                        std::span<const double> xj);
double squared_distance(const KernelizedModel& model, std::span<const double> xi,
                        std::span<const double> xj);

}  // namespace nlemb
