#pragma once

#include "tabforge/common.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace tabforge::core {

struct SplitIndices {
    std::vector<Index> train;
    std::vector<Index> test;
    std::uint64_t seed = 0;
    double ratio = 0.0;
};

/// Seeded train/test split with |train| = floor(ratio * n). When stratified,
/// per-class counts are proportional (largest-remainder rounding keeps the
/// train total exact), so class shares in both partitions stay within 1/|part|
/// of the overall share.
SplitIndices train_test_split(const IntVector& target, double ratio, std::uint64_t seed,
                              bool stratified);

/// Duplicates minority rows uniformly at random (with replacement) until class
/// counts are equal. Original rows come first, appended duplicates follow.
std::pair<Matrix, IntVector> oversample_minority(const Matrix& features, const IntVector& target,
                                                 std::uint64_t seed);

} // namespace tabforge::core
