#pragma once

#include "nlemb/model.hpp"
#include "nlemb/pca.hpp"

#include <span>
#include <variant>

namespace nlemb {

using AnyModel = std::variant<LinearModel, NonlinearModel, KernelizedModel, PcaModel>;

Index model_dim(const AnyModel& model);
Index model_input_dim(const AnyModel& model);

Vector embed_one(const AnyModel& model, std::span<const double> x);

/// Embeds every row; output is N x d. Warns once on stderr when a chi2 model
/// is applied to features that are not declared l1-normalized.
Matrix embed_all(const AnyModel& model, const FeatureMatrix& features);

}  // namespace nlemb
