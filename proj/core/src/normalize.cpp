#include "nlemb/normalize.hpp"

#include "nlemb/errors.hpp"

#include <string>

namespace nlemb {

FeatureMatrix l1_normalize(const FeatureMatrix& m) {
    if (m.norm_state == NormState::l1) {
        return m;
    }
    FeatureMatrix out;
    out.values = m.values;
    for (Index r = 0; r < out.values.rows(); ++r) {
        double sum = 0.0;
        for (Index c = 0; c < out.values.cols(); ++c) {
            const double v = out.values(r, c);
            if (v < 0.0) {
                throw NegativeEntry("l1_normalize: negative entry at row " + std::to_string(r) +
                                    ", col " + std::to_string(c));
            }
            sum += v;
        }
        if (sum == 0.0) {
            throw ZeroRow("l1_normalize: row " + std::to_string(r) + " sums to zero");
        }
        out.values.row(r) /= sum;
    }
    out.norm_state = NormState::l1;
    return out;
}

FeatureMatrix l2_normalize(const FeatureMatrix& m) {
    if (m.norm_state == NormState::l2) {
        return m;
    }
    FeatureMatrix out;
    out.values = m.values;
    for (Index r = 0; r < out.values.rows(); ++r) {
        const double norm = out.values.row(r).norm();
        if (norm == 0.0) {
            throw ZeroRow("l2_normalize: row " + std::to_string(r) + " has zero norm");
        }
        out.values.row(r) /= norm;
    }
    out.norm_state = NormState::l2;
    return out;
}

}  // namespace nlemb
