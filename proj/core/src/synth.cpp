#include "nlemb/synth.hpp"

#include "nlemb/errors.hpp"
#include "nlemb/rng.hpp"

#include <algorithm>
#include <cmath>

namespace nlemb {

std::pair<FeatureMatrix, LabelVector> synth_blobs(Index classes, Index per_class, Index dims,
                                                  double separation, std::uint64_t seed) {
    if (classes < 2 || per_class < 2 || dims < classes) {
        throw ValidationError("synth_blobs: need classes >= 2, per_class >= 2, dims >= classes");
    }
    if (!(separation >= 0.0)) {
        throw ValidationError("synth_blobs: separation must be non-negative");
    }

    const Index n = classes * per_class;
    FeatureMatrix fm;
    fm.values.resize(n, dims);
    LabelVector labels(static_cast<std::size_t>(n));

    Rng rng(seed);
    const double noise = 0.5;
    Index row = 0;
    for (Index c = 0; c < classes; ++c) {
        for (Index s = 0; s < per_class; ++s, ++row) {
            double sum = 0.0;
            for (Index j = 0; j < dims; ++j) {
                const double proto = (j % classes == c) ? 1.0 + separation : 1.0;
                const double v = std::max(0.0, proto + noise * rng.normal());
                fm.values(row, j) = v;
                sum += v;
            }
            if (sum == 0.0) {
                // Vanishingly unlikely; keep the row a valid histogram anyway.
                fm.values(row, c) = 1.0;
                sum = 1.0;
            }
            fm.values.row(row) /= sum;
            labels[static_cast<std::size_t>(row)] = c;
        }
    }
    fm.norm_state = NormState::l1;
    return {std::move(fm), std::move(labels)};
}

std::pair<FeatureMatrix, LabelVector> synth_nonlinear(Index classes, Index per_class, Index dims,
                                                      std::uint64_t seed) {
    if (classes != 2) {
        throw ValidationError("synth_nonlinear: exactly 2 classes supported");
    }
    if (per_class < 2 || dims < 4) {
        throw ValidationError("synth_nonlinear: need per_class >= 2 and dims >= 4");
    }

    // Entropy bands: class 0 alternates spiky and near-uniform rows, class 1
    // sits in between. Values picked so the bands do not overlap.
    const double t_low = 0.30;
    const double t_mid = 0.85;
    const double t_high = 2.60;

    const Index n = 2 * per_class;
    FeatureMatrix fm;
    fm.values.resize(n, dims);
    LabelVector labels(static_cast<std::size_t>(n));

    Rng rng(seed);
    Vector g(dims);
    Index row = 0;
    for (Index c = 0; c < 2; ++c) {
        for (Index s = 0; s < per_class; ++s, ++row) {
            double temperature = t_mid;
            if (c == 0) {
                temperature = (s % 2 == 0) ? t_low : t_high;
            }
            for (Index j = 0; j < dims; ++j) {
                g[j] = rng.normal();
            }
            const double gmax = g.maxCoeff();
            double sum = 0.0;
            for (Index j = 0; j < dims; ++j) {
                const double v = std::exp((g[j] - gmax) / temperature);
                fm.values(row, j) = v;
                sum += v;
            }
            fm.values.row(row) /= sum;
            labels[static_cast<std::size_t>(row)] = c;
        }
    }
    fm.norm_state = NormState::l1;
    return {std::move(fm), std::move(labels)};
}

}  // namespace nlemb
