#include "tabforge/encode.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

namespace tabforge::core {

Index EncodedMatrix::feature_index(const std::string& name) const {
    const auto it = std::find(feature_names.begin(), feature_names.end(), name);
    if (it == feature_names.end()) fail("UnknownColumn", "no feature named '" + name + "'");
    return static_cast<Index>(it - feature_names.begin());
}

EncodedMatrix label_encode(const Table& table) {
    const Index n = table.row_count();
    Index target_col = -1;
    std::vector<Index> feature_cols;
    for (Index c = 0; c < table.column_count(); ++c) {
        if (table.count_nulls(c) > 0) {
            fail("NullPresent", "column '" + table.column(c).name +
                                    "' still has nulls; impute before encoding");
        }
        if (table.column(c).kind == ColumnKind::binary_target) {
            target_col = c;
        } else if (table.column(c).name != "id") {
            feature_cols.push_back(c);
        }
    }
    if (target_col < 0) fail("NoTargetColumn", "table has no binary-target column");

    EncodedMatrix out;
    out.features.resize(n, static_cast<Index>(feature_cols.size()));
    out.target.resize(n);

    for (Index r = 0; r < n; ++r) {
        const double y = table.number_at(r, target_col);
        if (y != 0.0 && y != 1.0) {
            fail("NonBinaryValue", "target value " + std::to_string(y) + " at row " +
                                       std::to_string(r + 1) + " is not 0/1");
        }
        out.target[r] = static_cast<int>(y);
    }

    for (std::size_t j = 0; j < feature_cols.size(); ++j) {
        const Index c = feature_cols[j];
        const auto& schema = table.column(c);
        out.feature_names.push_back(schema.name);
        out.feature_kinds.push_back(schema.kind);
        if (table.is_numeric_column(c)) {
            for (Index r = 0; r < n; ++r) {
                out.features(r, static_cast<Index>(j)) = table.number_at(r, c);
            }
            continue;
        }
        // lexicographic code assignment over the column's category registry
        std::vector<std::string> cats = table.categories(c);
        std::sort(cats.begin(), cats.end());
        std::map<std::string, int> codes;
        for (std::size_t k = 0; k < cats.size(); ++k) codes[cats[k]] = static_cast<int>(k);
        out.encoding_map[schema.name] = codes;
        for (Index r = 0; r < n; ++r) {
            out.features(r, static_cast<Index>(j)) =
                static_cast<double>(codes.at(table.category_at(r, c)));
        }
    }
    return out;
}

std::string decode_category(const EncodedMatrix& matrix, const std::string& column, int code) {
    const auto col = matrix.encoding_map.find(column);
    if (col == matrix.encoding_map.end()) {
        fail("UnknownColumn", "'" + column + "' has no encoding map");
    }
    for (const auto& [category, c] : col->second) {
        if (c == code) return category;
    }
    fail("UnknownCategory", "no category with code " + std::to_string(code) + " in '" + column + "'");
}

std::string encoding_map_to_json(const EncodedMatrix& matrix) {
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& [column, codes] : matrix.encoding_map) {
        nlohmann::json entry = nlohmann::json::object();
        for (const auto& [category, code] : codes) entry[category] = code;
        doc[column] = std::move(entry);
    }
    return doc.dump(2);
}

EncodedMatrix select_features(const EncodedMatrix& matrix, const std::vector<std::string>& names) {
    EncodedMatrix out;
    out.target = matrix.target;
    out.features.resize(matrix.rows(), static_cast<Index>(names.size()));
    for (std::size_t j = 0; j < names.size(); ++j) {
        const Index src = matrix.feature_index(names[j]);
        out.features.col(static_cast<Index>(j)) = matrix.features.col(src);
        out.feature_names.push_back(names[j]);
        out.feature_kinds.push_back(matrix.feature_kinds[static_cast<std::size_t>(src)]);
        const auto it = matrix.encoding_map.find(names[j]);
        if (it != matrix.encoding_map.end()) out.encoding_map[names[j]] = it->second;
    }
    return out;
}

} // namespace tabforge::core
