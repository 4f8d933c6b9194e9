#include "nlemb/model.hpp"

#include "nlemb/errors.hpp"

#include <string>

namespace nlemb {

namespace {

void check_dim(Index expected, std::size_t got, const char* what) {
    if (static_cast<std::size_t>(expected) != got) {
        throw DimensionMismatch(std::string(what) + ": expected dimension " +
                                std::to_string(expected) + ", got " + std::to_string(got));
    }
}

}  // namespace

Vector embed(const NonlinearModel& model, std::span<const double> x) {
    check_dim(model.input_dim(), x.size(), "embed(nonlinear)");
    Vector out(model.dim());
    for (Index t = 0; t < model.dim(); ++t) {
        out[t] = kernel_value(model.kernel, model.landmark(t), x);
    }
    return out;
}

Vector embed(const LinearModel& model, std::span<const double> x) {
    check_dim(model.input_dim(), x.size(), "embed(linear)");
    return model.projection *
           Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Index>(x.size()));
}

Vector embed(const KernelizedModel& model, std::span<const double> x) {
    check_dim(model.input_dim(), x.size(), "embed(kernelized)");
    Vector k(model.anchor_count());
    for (Index t = 0; t < model.anchor_count(); ++t) {
        std::span<const double> anchor{model.anchors.data() + t * model.anchors.cols(),
                                       static_cast<std::size_t>(model.anchors.cols())};
        k[t] = kernel_value(model.kernel, anchor, x);
    }
    return model.coefficients * k;
}

double squared_distance(const NonlinearModel& model, std::span<const double> xi,
                        std::span<const double> xj) {
    check_dim(model.input_dim(), xi.size(), "squared_distance(nonlinear)");
    check_dim(model.input_dim(), xj.size(), "squared_distance(nonlinear)");
    double sum = 0.0;
    for (Index t = 0; t < model.dim(); ++t) {
        const auto landmark = model.landmark(t);
        const double diff =
            kernel_value(model.kernel, landmark, xi) - kernel_value(model.kernel, landmark, xj);
        sum += diff * diff;
    }
    return sum;
}

double squared_distance(const LinearModel& model, std::span<const double> xi,
                        std::span<const double> xj) {
    check_dim(model.input_dim(), xi.size(), "squared_distance(linear)");
    check_dim(model.input_dim(), xj.size(), "squared_distance(linear)");
    const Eigen::Map<const Eigen::VectorXd> vi(xi.data(), static_cast<Index>(xi.size()));
    const Eigen::Map<const Eigen::VectorXd> vj(xj.data(), static_cast<Index>(xj.size()));
    return (model.projection * (vi - vj)).squaredNorm();
}

double squared_distance(const KernelizedModel& model, std::span<const double> xi,
                        std::span<const double> xj) {
    return (embed(model, xi) - embed(model, xj)).squaredNorm();
}

}  // namespace nlemb
