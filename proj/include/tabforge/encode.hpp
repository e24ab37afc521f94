#pragma once

#include "tabforge/common.hpp"
#include "tabforge/table.hpp"

#include <map>
#include <string>
#include <vector>

namespace tabforge::core {

/// Numeric feature matrix plus binary target, the output of label encoding.
/// Categorical codes are consecutive integers assigned in ascending
/// lexicographic order of the category string.
struct EncodedMatrix {
    Matrix features;                    // n x m
    IntVector target;                   // n, values in {0, 1}
    std::vector<std::string> feature_names;
    std::vector<ColumnKind> feature_kinds; // source schema kind per feature
    std::map<std::string, std::map<std::string, int>> encoding_map;

    Index rows() const { return features.rows(); }
    Index feature_count() const { return features.cols(); }
    Index feature_index(const std::string& name) const;
};

/// Encodes a null-free table. Numeric columns pass through unchanged,
/// categorical columns become lexicographic codes, the target column is
/// extracted, and any column named "id" is treated as a row identifier and
/// excluded from the features.
EncodedMatrix label_encode(const Table& table);

/// Decodes a categorical feature value back to its category string.
std::string decode_category(const EncodedMatrix& matrix, const std::string& column, int code);

std::string encoding_map_to_json(const EncodedMatrix& matrix);

/// Restriction to the named features, column order preserved as listed.
EncodedMatrix select_features(const EncodedMatrix& matrix, const std::vector<std::string>& names);

} // namespace tabforge::core
