#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

namespace nlemb {

// Row-major so that feature rows are contiguous and can be handed out as spans.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

using Label = std::int64_t;
using LabelVector = std::vector<Label>;

enum class NormState { raw, l1, l2 };

/// Dense N x D feature storage with a declared normalization state.
/// Immutable by convention once built; all consumers take it by const ref.
struct FeatureMatrix {
    Matrix values;
    NormState norm_state = NormState::raw;

    Index rows() const { return values.rows(); }
    Index dims() const { return values.cols(); }

    std::span<const double> row_span(Index i) const {
        return {values.data() + i * values.cols(), static_cast<std::size_t>(values.cols())};
    }
};

/// One pairwise constraint: row indices and a similarity label in {-1, +1}.
struct PairConstraint {
    Index i = 0;
    Index j = 0;
    int y = 1;
};

struct PairSet {
    std::vector<PairConstraint> pairs;
    std::size_t pos_count = 0;
    std::size_t neg_count = 0;

    std::size_t size() const { return pairs.size(); }
    bool empty() const { return pairs.empty(); }
};

}  // namespace nlemb
