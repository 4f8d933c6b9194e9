#include "nlemb/train.hpp"

#include "nlemb/errors.hpp"
#include "nlemb/rng.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

namespace nlemb {

namespace {

void validate_pairs(const PairSet& pairs, Index num_rows) {
    if (pairs.empty()) {
        throw EmptyPairSet("training requires at least one pair");
    }
    for (const auto& p : pairs.pairs) {
        if (p.i < 0 || p.j < 0 || p.i >= num_rows || p.j >= num_rows || p.i == p.j ||
            (p.y != 1 && p.y != -1)) {
            throw ValidationError("pair set does not index into the feature matrix");
        }
    }
}

Matrix uniform_init(Index rows, Index cols, double lo, double hi, Rng& rng) {
    Matrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        for (Index c = 0; c < cols; ++c) {
            m(r, c) = rng.uniform(lo, hi);
        }
    }
    return m;
}

// Strided subset of at most 10,000 pair indices used for the objective trace.
std::vector<std::size_t> monitor_subset(std::size_t num_pairs) {
    const std::size_t cap = 10'000;
    const std::size_t stride = std::max<std::size_t>(1, num_pairs / cap);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < num_pairs && out.size() < cap; k += stride) {
        out.push_back(k);
    }
    return out;
}

template <typename Dist2Fn>
double monitored_loss(const PairSet& pairs, const std::vector<std::size_t>& subset, double b,
                      double m, Dist2Fn&& dist2) {
    double sum = 0.0;
    for (const std::size_t k : subset) {
        const auto& p = pairs.pairs[k];
        sum += hinge_loss(p.y, b, m, dist2(p.i, p.j));
    }
    return sum / static_cast<double>(subset.size());
}

}  // namespace

void TrainConfig::validate() const {
    if (!(learning_rate > 0.0)) {
        throw ValidationError("TrainConfig: learning_rate must be positive");
    }
    if (!(margin > 0.0)) {
        throw ValidationError("TrainConfig: margin must be positive");
    }
    if (!(init_low < init_high)) {
        throw ValidationError("TrainConfig: init_low must be below init_high");
    }
    if (!std::isfinite(bias) || !std::isfinite(margin) || !std::isfinite(learning_rate)) {
        throw ValidationError("TrainConfig: non-finite hyperparameter");
    }
}

double hinge_loss(int y, double b, double m, double dist2) {
    return std::max(0.0, m - y * (b - dist2));
}

PairSubgradient pair_subgradient(const NonlinearModel& model, std::span<const double> xi,
                                 std::span<const double> xj, int y) {
    const Index d = model.dim();
    const Index dim = model.input_dim();
    PairSubgradient out;
    out.landmarks = Matrix::Zero(d, dim);

    Vector ki(d);
    Vector kj(d);
    for (Index t = 0; t < d; ++t) {
        const auto landmark = model.landmark(t);
        ki[t] = kernel_value(model.kernel, landmark, xi);
        kj[t] = kernel_value(model.kernel, landmark, xj);
    }
    const double dist2 = (ki - kj).squaredNorm();
    if (y * (model.bias - dist2) >= model.margin) {
        return out;
    }
    out.active = true;
    out.bias = -y;

    Vector gi(dim);
    Vector gj(dim);
    for (Index t = 0; t < d; ++t) {
        const auto landmark = model.landmark(t);
        kernel_gradient(model.kernel, landmark, xi, {gi.data(), static_cast<std::size_t>(dim)});
        kernel_gradient(model.kernel, landmark, xj, {gj.data(), static_cast<std::size_t>(dim)});
        out.landmarks.row(t) = (2.0 * y * (ki[t] - kj[t])) * (gi - gj).transpose();
    }
    return out;
}

std::pair<NonlinearModel, TrainReport> train_nonlinear(const FeatureMatrix& features,
                                                       const PairSet& pairs, Index d,
                                                       KernelId kernel, const TrainConfig& cfg) {
    cfg.validate();
    if (d < 1) {
        throw ValidationError("train_nonlinear: d must be >= 1");
    }
    validate_pairs(pairs, features.rows());
    if (kernel == KernelId::chi2 && features.norm_state != NormState::l1) {
        throw NotL1Normalized("train_nonlinear: chi2 kernel requires l1-normalized histograms");
    }
    if (kernel == KernelId::linear && features.norm_state == NormState::raw) {
        std::cerr << "warning: training the linear-kernel embedding on unnormalized features\n";
    }

    Rng rng(cfg.seed);
    NonlinearModel model;
    model.kernel = kernel;
    model.bias = cfg.bias;
    model.margin = cfg.margin;
    model.landmarks = uniform_init(d, features.dims(), cfg.init_low, cfg.init_high, rng);

    TrainReport report;
    const auto subset = cfg.eval_every > 0 ? monitor_subset(pairs.size()) : std::vector<std::size_t>{};
    const Index dim = features.dims();
    const double r = cfg.learning_rate;
    Vector ki(d);
    Vector kj(d);
    Vector gi(dim);
    Vector gj(dim);

    double loss_sum = 0.0;
    std::size_t active = 0;
    for (std::size_t it = 1; it <= cfg.iterations; ++it) {
        const auto& p = pairs.pairs[rng.index(pairs.size())];
        const auto xi = features.row_span(p.i);
        const auto xj = features.row_span(p.j);

        for (Index t = 0; t < d; ++t) {
            const auto landmark = model.landmark(t);
            ki[t] = kernel_value(kernel, landmark, xi);
            kj[t] = kernel_value(kernel, landmark, xj);
        }
        const double dist2 = (ki - kj).squaredNorm();
        if (!std::isfinite(dist2)) {
            throw NumericError("train_nonlinear: non-finite distance at iteration " +
                               std::to_string(it));
        }
        loss_sum += hinge_loss(p.y, model.bias, model.margin, dist2);

        if (p.y * (model.bias - dist2) < model.margin) {
            ++active;
            for (Index t = 0; t < d; ++t) {
                const auto landmark = model.landmark(t);
                kernel_gradient(kernel, landmark, xi, {gi.data(), static_cast<std::size_t>(dim)});
                kernel_gradient(kernel, landmark, xj, {gj.data(), static_cast<std::size_t>(dim)});
                const double step = r * p.y * (ki[t] - kj[t]);
                model.landmarks.row(t) -= step * (gi - gj).transpose();
            }
            if (cfg.update_bias) {
                model.bias += r * p.y;
            }
        }

        if (cfg.eval_every > 0 && it % cfg.eval_every == 0) {
            if (!model.landmarks.allFinite()) {
                throw NumericError("train_nonlinear: model diverged");
            }
            report.objective_trace.emplace_back(
                it, monitored_loss(pairs, subset, model.bias, model.margin,
                                   [&](Index i, Index j) {
                                       return squared_distance(model, features.row_span(i),
                                                               features.row_span(j));
                                   }));
        }
    }

    if (!model.landmarks.allFinite() || !std::isfinite(model.bias)) {
        throw NumericError("train_nonlinear: model diverged");
    }
    if (cfg.iterations > 0) {
        report.final_objective_estimate = loss_sum / static_cast<double>(cfg.iterations);
        report.active_fraction = static_cast<double>(active) / static_cast<double>(cfg.iterations);
    }
    return {std::move(model), std::move(report)};
}

std::pair<LinearModel, TrainReport> train_linear(const FeatureMatrix& features,
                                                 const PairSet& pairs, Index d,
                                                 const TrainConfig& cfg) {
    cfg.validate();
    if (d < 1) {
        throw ValidationError("train_linear: d must be >= 1");
    }
    validate_pairs(pairs, features.rows());

    Rng rng(cfg.seed);
    LinearModel model;
    model.bias = cfg.bias;
    model.margin = cfg.margin;
    model.projection = uniform_init(d, features.dims(), cfg.init_low, cfg.init_high, rng);

    TrainReport report;
    const auto subset = cfg.eval_every > 0 ? monitor_subset(pairs.size()) : std::vector<std::size_t>{};
    const double r = cfg.learning_rate;
    Vector delta(features.dims());
    Vector projected(d);

    double loss_sum = 0.0;
    std::size_t active = 0;
    for (std::size_t it = 1; it <= cfg.iterations; ++it) {
        const auto& p = pairs.pairs[rng.index(pairs.size())];
        delta = features.values.row(p.i) - features.values.row(p.j);
        projected.noalias() = model.projection * delta;
        const double dist2 = projected.squaredNorm();
        if (!std::isfinite(dist2)) {
            throw NumericError("train_linear: non-finite distance at iteration " +
                               std::to_string(it));
        }
        loss_sum += hinge_loss(p.y, model.bias, model.margin, dist2);

        if (p.y * (model.bias - dist2) < model.margin) {
            ++active;
            model.projection.noalias() -= (r * p.y) * projected * delta.transpose();
            if (cfg.update_bias) {
                model.bias += r * p.y;
            }
        }

        if (cfg.eval_every > 0 && it % cfg.eval_every == 0) {
            if (!model.projection.allFinite()) {
                throw NumericError("train_linear: model diverged");
            }
            report.objective_trace.emplace_back(
                it, monitored_loss(pairs, subset, model.bias, model.margin,
                                   [&](Index i, Index j) {
                                       return squared_distance(model, features.row_span(i),
                                                               features.row_span(j));
                                   }));
        }
    }

    if (!model.projection.allFinite() || !std::isfinite(model.bias)) {
        throw NumericError("train_linear: model diverged");
    }
    if (cfg.iterations > 0) {
        report.final_objective_estimate = loss_sum / static_cast<double>(cfg.iterations);
        report.active_fraction = static_cast<double>(active) / static_cast<double>(cfg.iterations);
    }
    return {std::move(model), std::move(report)};
}

std::pair<KernelizedModel, TrainReport> train_kernelized(const FeatureMatrix& features,
                                                         const PairSet& pairs, Index d,
                                                         KernelId kernel, const TrainConfig& cfg) {
    cfg.validate();
    if (d < 1) {
        throw ValidationError("train_kernelized: d must be >= 1");
    }
    const Index n = features.rows();
    if (n > 20'000) {
        throw TooManyAnchors("train_kernelized: " + std::to_string(n) +
                             " anchors exceed the 20,000 guard");
    }
    validate_pairs(pairs, n);

    // Full kernel matrix of the training rows; row i is the kernel vector k_i.
    Matrix kmat(n, n);
    for (Index i = 0; i < n; ++i) {
        kmat(i, i) = kernel_value(kernel, features.row_span(i), features.row_span(i));
        for (Index j = i + 1; j < n; ++j) {
            const double v = kernel_value(kernel, features.row_span(i), features.row_span(j));
            kmat(i, j) = v;
            kmat(j, i) = v;
        }
    }

    Rng rng(cfg.seed);
    KernelizedModel model;
    model.kernel = kernel;
    model.bias = cfg.bias;
    model.margin = cfg.margin;
    model.coefficients =
        uniform_init(d, n, cfg.init_low, cfg.init_high, rng) / static_cast<double>(n);
    model.anchors = features.values;

    TrainReport report;
    const auto subset = cfg.eval_every > 0 ? monitor_subset(pairs.size()) : std::vector<std::size_t>{};
    const double r = cfg.learning_rate;
    Vector dk(n);
    Vector projected(d);

    const auto pair_dist2 = [&](Index i, Index j) {
        return (model.coefficients * (kmat.row(i) - kmat.row(j)).transpose()).squaredNorm();
    };

    double loss_sum = 0.0;
    std::size_t active = 0;
    for (std::size_t it = 1; it <= cfg.iterations; ++it) {
        const auto& p = pairs.pairs[rng.index(pairs.size())];
        dk = kmat.row(p.i) - kmat.row(p.j);
        projected.noalias() = model.coefficients * dk;
        const double dist2 = projected.squaredNorm();
        if (!std::isfinite(dist2)) {
            throw NumericError("train_kernelized: non-finite distance at iteration " +
                               std::to_string(it));
        }
        loss_sum += hinge_loss(p.y, model.bias, model.margin, dist2);

        if (p.y * (model.bias - dist2) < model.margin) {
            ++active;
            model.coefficients.noalias() -= (r * p.y) * projected * dk.transpose();
            if (cfg.update_bias) {
                model.bias += r * p.y;
            }
        }

        if (cfg.eval_every > 0 && it % cfg.eval_every == 0) {
            if (!model.coefficients.allFinite()) {
                throw NumericError("train_kernelized: model diverged");
            }
            report.objective_trace.emplace_back(
                it, monitored_loss(pairs, subset, model.bias, model.margin, pair_dist2));
        }
    }

    if (!model.coefficients.allFinite() || !std::isfinite(model.bias)) {
        throw NumericError("train_kernelized: model diverged");
    }
    if (cfg.iterations > 0) {
        report.final_objective_estimate = loss_sum / static_cast<double>(cfg.iterations);
        report.active_fraction = static_cast<double>(active) / static_cast<double>(cfg.iterations);
    }
    return {std::move(model), std::move(report)};
}

double average_hinge_loss(const NonlinearModel& model, const FeatureMatrix& features,
                          const PairSet& pairs) {
    if (pairs.empty()) {
        throw EmptyPairSet("average_hinge_loss: empty pair set");
    }
    double sum = 0.0;
    for (const auto& p : pairs.pairs) {
        sum += hinge_loss(p.y, model.bias, model.margin,
                          squared_distance(model, features.row_span(p.i), features.row_span(p.j)));
    }
    return sum / static_cast<double>(pairs.size());
}

double average_hinge_loss(const LinearModel& model, const FeatureMatrix& features,
                          const PairSet& pairs) {
    if (pairs.empty()) {
        throw EmptyPairSet("average_hinge_loss: empty pair set");
    }
    double sum = 0.0;
    for (const auto& p : pairs.pairs) {
        sum += hinge_loss(p.y, model.bias, model.margin,
                          squared_distance(model, features.row_span(p.i), features.row_span(p.j)));
    }
    return sum / static_cast<double>(pairs.size());
}

double average_hinge_loss(const KernelizedModel& model, const FeatureMatrix& features,
                          const PairSet& pairs) {
    if (pairs.empty()) {
        throw EmptyPairSet("average_hinge_loss: empty pair set");
    }
    double sum = 0.0;
    for (const auto& p : pairs.pairs) {
        sum += hinge_loss(p.y, model.bias, model.margin,
                          squared_distance(model, features.row_span(p.i), features.row_span(p.j)));
    }
    return sum / static_cast<double>(pairs.size());
}

GradCheckReport grad_check(KernelId kernel, Index d, Index input_dim, std::size_t trials,
                           std::uint64_t seed) {
    if (trials < 1 || d < 1 || input_dim < 1) {
        throw ValidationError("grad_check: trials, d and input_dim must be positive");
    }

    Rng rng(seed);
    const double h = 1e-6;
    const double bias = kernel == KernelId::chi2 ? 0.1 : 1.0;
    const double margin = kernel == KernelId::chi2 ? 0.02 : 0.2;

    GradCheckReport report;
    report.trials = trials;

    NonlinearModel model;
    model.kernel = kernel;
    model.bias = bias;
    model.margin = margin;
    model.landmarks.resize(d, input_dim);

    Matrix x(2, input_dim);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        int y = 0;
        double dist2 = 0.0;
        // Rejection-sample an active configuration away from the hinge kink
        // and away from zero landmark coordinates.
        for (int attempt = 0; attempt < 1000; ++attempt) {
            for (Index t = 0; t < d; ++t) {
                for (Index c = 0; c < input_dim; ++c) {
                    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
                    model.landmarks(t, c) = sign * rng.uniform(0.05, 1.0);
                }
            }
            for (Index row = 0; row < 2; ++row) {
                double sum = 0.0;
                for (Index c = 0; c < input_dim; ++c) {
                    x(row, c) = rng.uniform(0.05, 1.0);
                    sum += x(row, c);
                }
                x.row(row) /= sum;
            }
            y = rng.uniform() < 0.5 ? 1 : -1;
            dist2 = squared_distance(model, {x.data(), static_cast<std::size_t>(input_dim)},
                                     {x.data() + input_dim, static_cast<std::size_t>(input_dim)});
            const double slack = y * (bias - dist2) - margin;
            if (slack < -1e-3) {
                break;
            }
            y = 0;
        }
        if (y == 0) {
            continue;  // could not find an active configuration; skip trial
        }

        const std::span<const double> xi{x.data(), static_cast<std::size_t>(input_dim)};
        const std::span<const double> xj{x.data() + input_dim,
                                         static_cast<std::size_t>(input_dim)};
        const PairSubgradient analytic = pair_subgradient(model, xi, xj, y);

        double max_abs = std::abs(analytic.bias);
        for (Index t = 0; t < d; ++t) {
            for (Index c = 0; c < input_dim; ++c) {
                max_abs = std::max(max_abs, std::abs(analytic.landmarks(t, c)));
            }
        }

        double max_diff = 0.0;
        for (Index t = 0; t < d; ++t) {
            for (Index c = 0; c < input_dim; ++c) {
                const double saved = model.landmarks(t, c);
                model.landmarks(t, c) = saved + h;
                const double up = hinge_loss(y, bias, margin, squared_distance(model, xi, xj));
                model.landmarks(t, c) = saved - h;
                const double down = hinge_loss(y, bias, margin, squared_distance(model, xi, xj));
                model.landmarks(t, c) = saved;
                const double numeric = (up - down) / (2.0 * h);
                max_diff = std::max(max_diff, std::abs(numeric - analytic.landmarks(t, c)));
            }
        }
        {
            const double up = hinge_loss(y, bias + h, margin, dist2);
            const double down = hinge_loss(y, bias - h, margin, dist2);
            max_diff = std::max(max_diff, std::abs((up - down) / (2.0 * h) - analytic.bias));
        }

        report.max_rel_error = std::max(report.max_rel_error, max_diff / std::max(max_abs, 1e-12));
    }
    return report;
}

}  // namespace nlemb
