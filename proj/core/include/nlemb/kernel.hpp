#pragma once

#include "nlemb/types.hpp"

#include <span>
#include <string>

namespace nlemb {

enum class KernelId { chi2, linear };

std::string kernel_token(KernelId id);
KernelId kernel_from_token(const std::string& token);

/// Kernel value k(a, x).
///
/// chi2 is the shifted chi-square kernel sum_c 2*a_c*x_c / (|a_c| + |x_c|),
/// with a 0/0 coordinate contributing 0 (the two-sided limit). linear is the
/// plain dot product. Symmetric in its arguments. Throws DimensionMismatch.
double kernel_value(KernelId id, std::span<const double> a, std::span<const double> x);

/// Gradient of kernel_value with respect to the first argument, written to
/// `out` (size must match). For chi2, component c is
/// 2*x_c*|x_c| / (|x_c| + |a_c|)^2, defined as 0 when both coordinates are 0;
/// at a_c = 0 with x_c != 0 this is the subgradient choice 2*sign(x_c). For
/// linear the gradient is x.
void kernel_gradient(KernelId id, std::span<const double> a, std::span<const double> x,
                     std::span<double> out);

Vector kernel_gradient(KernelId id, std::span<const double> a, std::span<const double> x);

}  // namespace nlemb
