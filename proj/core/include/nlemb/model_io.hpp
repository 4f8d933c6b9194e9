#pragma once

#include "nlemb/any_model.hpp"

#include <iosfwd>
#include <string>

namespace nlemb {

/// Model container: magic "NLEM", version byte 0x01, model-kind byte
/// (0 = linear, 1 = nonlinear, 2 = kernelized, 3 = pca), kernel token as a
/// length-prefixed ASCII string ("none" for kinds without a kernel), d and D
/// (plus N for kernelized) as unsigned 64-bit little-endian, bias and margin
/// as float64 little-endian, then the parameter payload as float64
/// little-endian row-major. Kernelized appends the anchor matrix; pca stores
/// components, then mean, then explained variances. Round-trips bit-exactly.
void save_model(const AnyModel& model, std::ostream& out);
void save_model(const AnyModel& model, const std::string& path);

AnyModel load_model(std::istream& in);
AnyModel load_model(const std::string& path);

}  // namespace nlemb
