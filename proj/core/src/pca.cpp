#include "nlemb/pca.hpp"

#include "nlemb/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <iostream>

namespace nlemb {

namespace {

void canonicalize_signs(Matrix& components) {
    for (Index r = 0; r < components.rows(); ++r) {
        Index arg = 0;
        components.row(r).cwiseAbs().maxCoeff(&arg);
        if (components(r, arg) < 0.0) {
            components.row(r) = -components.row(r);
        }
    }
}

// Extend `components` (first `have` rows filled, orthonormal) to `want` rows
// by Gram-Schmidt over canonical unit vectors. Only reached on rank-deficient
// input through the Gram route.
void complete_basis(Matrix& components, Index have, Index want) {
    const Index dim = components.cols();
    Index next_axis = 0;
    for (Index r = have; r < want; ++r) {
        while (next_axis < dim) {
            Eigen::RowVectorXd v = Eigen::RowVectorXd::Zero(dim);
            v[next_axis++] = 1.0;
            for (Index k = 0; k < r; ++k) {
                v -= components.row(k).dot(v) * components.row(k);
            }
            const double norm = v.norm();
            if (norm > 1e-8) {
                components.row(r) = v / norm;
                break;
            }
        }
    }
}

}  // namespace

PcaModel fit_pca(const FeatureMatrix& features, Index d) {
    const Index n = features.rows();
    const Index dim = features.dims();
    if (n < 2) {
        throw ValidationError("fit_pca: need at least 2 rows");
    }
    if (d < 1 || d > std::min(n, dim)) {
        throw ValidationError("fit_pca: d must lie in [1, min(N, D)]");
    }

    PcaModel model;
    model.mean = features.values.colwise().mean();
    Matrix centered = features.values.rowwise() - model.mean.transpose();

    model.components.resize(d, dim);
    model.explained_variance.resize(d);

    if (n < dim) {
        // Gram route: eigenvectors of the N x N matrix lift to input space.
        const Eigen::MatrixXd gram = centered * centered.transpose();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
        const auto& evals = solver.eigenvalues();  // ascending
        const double tol = std::max(evals(n - 1), 0.0) * 1e-12;
        Index filled = 0;
        for (Index k = 0; k < d; ++k) {
            const double lambda = evals(n - 1 - k);
            if (lambda <= tol) {
                break;
            }
            const Eigen::VectorXd u = solver.eigenvectors().col(n - 1 - k);
            model.components.row(k) = (centered.transpose() * u).transpose() / std::sqrt(lambda);
            model.explained_variance[k] = lambda / static_cast<double>(n - 1);
            ++filled;
        }
        model.rank = filled;
        for (Index k = filled; k < d; ++k) {
            model.explained_variance[k] = 0.0;
        }
        complete_basis(model.components, filled, d);
    } else {
        const Eigen::MatrixXd cov = centered.transpose() * centered;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
        const auto& evals = solver.eigenvalues();
        const double tol = std::max(evals(dim - 1), 0.0) * 1e-12;
        model.rank = 0;
        for (Index k = 0; k < d; ++k) {
            const double lambda = std::max(evals(dim - 1 - k), 0.0);
            model.components.row(k) = solver.eigenvectors().col(dim - 1 - k).transpose();
            model.explained_variance[k] = lambda <= tol ? 0.0 : lambda / static_cast<double>(n - 1);
            if (lambda > tol) {
                ++model.rank;
            }
        }
    }

    if (model.rank < d) {
        std::cerr << "fit_pca: data rank " << model.rank << " below requested d = " << d
                  << "; padding with zero variance\n";
    }
    canonicalize_signs(model.components);
    return model;
}

Vector project_pca(const PcaModel& model, std::span<const double> x) {
    if (static_cast<Index>(x.size()) != model.input_dim()) {
        throw DimensionMismatch("project_pca: expected dimension " +
                                std::to_string(model.input_dim()) + ", got " +
                                std::to_string(x.size()));
    }
    const Eigen::Map<const Eigen::VectorXd> v(x.data(), static_cast<Index>(x.size()));
    return model.components * (v - model.mean);
}

}  // namespace nlemb
