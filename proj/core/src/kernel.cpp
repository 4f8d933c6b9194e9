#include "nlemb/kernel.hpp"

#include "nlemb/errors.hpp"

#include <cmath>

namespace nlemb {

std::string kernel_token(KernelId id) {
    return id == KernelId::chi2 ? "chi2" : "linear";
}

KernelId kernel_from_token(const std::string& token) {
    if (token == "chi2") {
        return KernelId::chi2;
    }
    if (token == "linear") {
        return KernelId::linear;
    }
    throw ValidationError("unknown kernel token: " + token);
}

double kernel_value(KernelId id, std::span<const double> a, std::span<const double> x) {
    if (a.size() != x.size()) {
        throw DimensionMismatch("kernel_value: size " + std::to_string(a.size()) + " vs " +
                                std::to_string(x.size()));
    }
    double sum = 0.0;
    if (id == KernelId::chi2) {
        for (std::size_t c = 0; c < a.size(); ++c) {
            const double denom = std::abs(a[c]) + std::abs(x[c]);
            if (denom > 0.0) {
                sum += 2.0 * a[c] * x[c] / denom;
            }
        }
    } else {
        for (std::size_t c = 0; c < a.size(); ++c) {
            sum += a[c] * x[c];
        }
    }
    return sum;
}

void kernel_gradient(KernelId id, std::span<const double> a, std::span<const double> x,
                     std::span<double> out) {
    if (a.size() != x.size() || out.size() != x.size()) {
        throw DimensionMismatch("kernel_gradient: mismatched sizes");
    }
    if (id == KernelId::chi2) {
        for (std::size_t c = 0; c < a.size(); ++c) {
            const double denom = std::abs(a[c]) + std::abs(x[c]);
            out[c] = denom > 0.0 ? 2.0 * x[c] * std::abs(x[c]) / (denom * denom) : 0.0;
        }
    } else {
        for (std::size_t c = 0; c < a.size(); ++c) {
            out[c] = x[c];
        }
    }
}

Vector kernel_gradient(KernelId id, std::span<const double> a, std::span<const double> x) {
    Vector out(static_cast<Index>(x.size()));
    kernel_gradient(id, a, x, {out.data(), x.size()});
    return out;
}

}  // namespace nlemb
