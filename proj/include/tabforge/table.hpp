#pragma once

#include "tabforge/common.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tabforge::core {

enum class ColumnKind { integer, real, categorical, binary_target };

const char* column_kind_name(ColumnKind kind);
ColumnKind column_kind_from_name(const std::string& name);

struct ColumnSchema {
    std::string name;
    ColumnKind kind = ColumnKind::real;
    std::vector<std::string> allowed_categories; // categorical columns only
};

/// A table cell: null, a number, or a category string.
using Cell = std::variant<std::monostate, double, std::string>;

/// Row-addressable dataset with a typed column schema. Storage is columnar:
/// numeric columns hold doubles (NaN = null), categorical columns hold codes
/// into a per-column category registry (-1 = null). The registry starts from
/// the schema's allowed categories and grows as ingestion meets new strings;
/// additions are recorded so callers can audit them.
class Table {
public:
    Table() = default;
    explicit Table(std::vector<ColumnSchema> schema);

    Index row_count() const { return rows_; }
    Index column_count() const { return static_cast<Index>(schema_.size()); }

    const std::vector<ColumnSchema>& schema() const { return schema_; }
    const ColumnSchema& column(Index col) const { return schema_.at(static_cast<std::size_t>(col)); }
    Index column_index(const std::string& name) const; // throws UnknownColumn

    bool is_numeric_column(Index col) const;
    bool is_null(Index row, Index col) const;
    double number_at(Index row, Index col) const;
    int category_code_at(Index row, Index col) const;
    const std::string& category_at(Index row, Index col) const;
    Cell cell(Index row, Index col) const;

    /// Categories known for a categorical column, registry order.
    const std::vector<std::string>& categories(Index col) const;
    /// (column name, category) pairs added beyond the schema's allowed list.
    const std::vector<std::pair<std::string, std::string>>& added_categories() const {
        return added_categories_;
    }

    void append_row(const std::vector<Cell>& cells);
    void set_number(Index row, Index col, double value);

    /// New table containing the given rows, original order of `rows`.
    Table select_rows(const std::vector<Index>& rows) const;

    /// Cell-wise equality on a column subset (empty = all columns).
    /// Nulls compare equal to nulls.
    bool rows_equal(Index a, Index b, const std::vector<Index>& columns) const;

    Index count_nulls(Index col) const;

private:
    int intern_category(Index col, const std::string& value);

    std::vector<ColumnSchema> schema_;
    Index rows_ = 0;
    // parallel to schema_: exactly one of the two stores per column is used
    std::vector<std::vector<double>> numeric_;
    std::vector<std::vector<int>> codes_;
    std::vector<std::vector<std::string>> categories_;
    std::vector<std::pair<std::string, std::string>> added_categories_;
};

/// Reads a CSV whose header matches `schema` by name and order. "N/A" and
/// empty fields become nulls. Unknown category strings are interned and
/// recorded. Numeric garbage raises UnparsableCell with 1-based data-row and
/// column coordinates.
Table load_csv(const std::string& path, const std::vector<ColumnSchema>& schema);

Table table_from_csv_text(const std::string& text, const std::vector<ColumnSchema>& schema);

/// The 12-attribute stroke dataset schema.
std::vector<ColumnSchema> stroke_schema();

std::vector<ColumnSchema> schema_from_json_file(const std::string& path);
std::string schema_to_json(const std::vector<ColumnSchema>& schema);

} // namespace tabforge::core
