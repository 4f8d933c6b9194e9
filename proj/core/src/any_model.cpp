#include "nlemb/any_model.hpp"

#include "nlemb/errors.hpp"

#include <iostream>

namespace nlemb {

namespace {

const KernelId* kernel_of(const AnyModel& model) {
    if (const auto* m = std::get_if<NonlinearModel>(&model)) {
        return &m->kernel;
    }
    if (const auto* m = std::get_if<KernelizedModel>(&model)) {
        return &m->kernel;
    }
    return nullptr;
}

}  // namespace

Index model_dim(const AnyModel& model) {
    return std::visit([](const auto& m) { return m.dim(); }, model);
}

Index model_input_dim(const AnyModel& model) {
    return std::visit([](const auto& m) { return m.input_dim(); }, model);
}

Vector embed_one(const AnyModel& model, std::span<const double> x) {
    return std::visit(
        [&](const auto& m) -> Vector {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, PcaModel>) {
                return project_pca(m, x);
            } else {
                return embed(m, x);
            }
        },
        model);
}

Matrix embed_all(const AnyModel& model, const FeatureMatrix& features) {
    if (features.dims() != model_input_dim(model)) {
        throw DimensionMismatch("embed_all: features have dimension " +
                                std::to_string(features.dims()) + ", model expects " +
                                std::to_string(model_input_dim(model)));
    }
    if (const KernelId* k = kernel_of(model);
        k && *k == KernelId::chi2 && features.norm_state != NormState::l1) {
        std::cerr << "warning: chi2 model applied to features that are not l1-normalized "
                     "histograms\n";
    }
    Matrix out(features.rows(), model_dim(model));
    for (Index r = 0; r < features.rows(); ++r) {
        out.row(r) = embed_one(model, features.row_span(r)).transpose();
    }
    return out;
}

}  // namespace nlemb
