#pragma once

#include "nlemb/kernel.hpp"
#include "nlemb/model.hpp"
#include "nlemb/types.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace nlemb {

struct TrainConfig {
    std::size_t iterations = 1'000'000;
    double learning_rate = 0.01;
    double margin = 0.02;
    double bias = 0.1;
    bool update_bias = false;
    std::uint64_t seed = 0;
    double init_low = -0.5;
    double init_high = 0.5;
    std::size_t eval_every = 0;  // 0 = no objective trace

    /// Per-family hyperparameters: nonlinear/kernelized use b=0.1, m=0.02;
    /// the linear baseline uses b=1, m=0.2.
    static TrainConfig nonlinear_defaults() { return {}; }
    static TrainConfig linear_defaults() {
        TrainConfig cfg;
        cfg.margin = 0.2;
        cfg.bias = 1.0;
        return cfg;
    }

    void validate() const;
};

struct TrainReport {
    /// Mean of the hinge losses of the sampled pairs over the whole run.
    double final_objective_estimate = 0.0;
    /// (iteration, mean hinge loss over the monitor subset) at every
    /// eval_every-th iteration. The monitor subset is a deterministic strided
    /// sample of at most 10,000 pairs from the training set.
    std::vector<std::pair<std::size_t, double>> objective_trace;
    /// Fraction of sampled pairs that violated the margin.
    double active_fraction = 0.0;
};

/// max(0, m - y * (b - dist2)).
double hinge_loss(int y, double b, double m, double dist2);

/// Subgradient of the per-pair hinge objective for the landmark model.
/// Zero when the pair satisfies the margin; otherwise row t is
/// 2 * y * (k_i^t - k_j^t) * (grad k_i^t - grad k_j^t) and the bias
/// subgradient is -y.
struct PairSubgradient {
    Matrix landmarks;  // d x D
    double bias = 0.0;
    bool active = false;
};
PairSubgradient pair_subgradient(const NonlinearModel& model, std::span<const double> xi,
                                 std::span<const double> xj, int y);

/// SGD over landmark rows: sample a pair, and on a margin violation step each
/// landmark along its kernel-gradient difference (the factor 2 of the true
/// subgradient is absorbed into the learning rate). Deterministic given
/// cfg.seed. Requires l1-normalized features for the chi2 kernel.
std::pair<NonlinearModel, TrainReport> train_nonlinear(const FeatureMatrix& features,
                                                       const PairSet& pairs, Index d,
                                                       KernelId kernel, const TrainConfig& cfg);

/// Same loop with the linear projection distance and rank-1 updates.
std::pair<LinearModel, TrainReport> train_linear(const FeatureMatrix& features,
                                                 const PairSet& pairs, Index d,
                                                 const TrainConfig& cfg);

/// Exact kernelized variant: precomputes the full kernel matrix of the
/// training rows (guarded at 20,000 anchors) and runs the same loop on the
/// coefficient matrix. Initialization is scaled by 1/N to keep initial
/// distances O(1).
std::pair<KernelizedModel, TrainReport> train_kernelized(const FeatureMatrix& features,
                                                         const PairSet& pairs, Index d,
                                                         KernelId kernel, const TrainConfig& cfg);

/// Mean hinge loss of a model over a pair set, using the model's own bias
/// and margin.
double average_hinge_loss(const NonlinearModel& model, const FeatureMatrix& features,
                          const PairSet& pairs);
double average_hinge_loss(const LinearModel& model, const FeatureMatrix& features,
                          const PairSet& pairs);
double average_hinge_loss(const KernelizedModel& model, const FeatureMatrix& features,
                          const PairSet& pairs);

/// Compares analytic pair subgradients against central finite differences on
/// random active, kink-free configurations (margin slack and landmark
/// coordinates bounded away from the non-differentiable points). Error is
/// measured as max absolute entry difference over the max-norm of the
/// subgradient.
struct GradCheckReport {
    double max_rel_error = 0.0;
    std::size_t trials = 0;
};
GradCheckReport grad_check(KernelId kernel, Index d, Index input_dim, std::size_t trials,
                           std::uint64_t seed);

}  // namespace nlemb
