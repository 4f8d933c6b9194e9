#pragma once

#include "nlemb/types.hpp"

#include <string>

namespace nlemb {

/// Binary feature container: magic "FMAT", version byte 0x01, then N and D as
/// unsigned 64-bit little-endian, then N*D float32 little-endian, row-major.
/// Values are held in float64 in memory and rounded to float32 on disk.
void save_features_binary(const std::string& path, const FeatureMatrix& m);
FeatureMatrix load_features_binary(const std::string& path);

/// CSV, one row per line, no header.
FeatureMatrix load_features_csv(const std::string& path);

/// Loads either container, picking by the magic bytes. Rows that are already
/// numerically l1- or l2-normalized (within 1e-6) are snapped to that exact
/// state so downstream validation sees the declared normalization.
FeatureMatrix load_features(const std::string& path);

/// One non-negative integer per line.
LabelVector load_labels(const std::string& path);
void save_labels(const std::string& path, const LabelVector& labels);

/// One "i j y" triple per line, whitespace-separated, y in {-1, 1}.
PairSet load_pairs(const std::string& path, Index num_rows);
void save_pairs(const std::string& path, const PairSet& pairs);

}  // namespace nlemb
