#include "tabforge/table.hpp"

#include "tabforge/csv.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace tabforge::core {

namespace {

constexpr double kNull = std::numeric_limits<double>::quiet_NaN();

bool is_null_token(const std::string& s) { return s.empty() || s == "N/A"; }

std::optional<double> parse_number(const std::string& s) {
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

void validate_schema(const std::vector<ColumnSchema>& schema) {
    int targets = 0;
    for (const auto& col : schema) {
        if (col.kind == ColumnKind::binary_target) ++targets;
    }
    if (targets != 1) {
        fail("NoTargetColumn", "schema must declare exactly one binary-target column, got " +
                                   std::to_string(targets));
    }
}

} // namespace

const char* column_kind_name(ColumnKind kind) {
    switch (kind) {
        case ColumnKind::integer: return "integer";
        case ColumnKind::real: return "real";
        case ColumnKind::categorical: return "categorical";
        case ColumnKind::binary_target: return "binary-target";
    }
    return "?";
}

ColumnKind column_kind_from_name(const std::string& name) {
    if (name == "integer") return ColumnKind::integer;
    if (name == "real") return ColumnKind::real;
    if (name == "categorical") return ColumnKind::categorical;
    if (name == "binary-target") return ColumnKind::binary_target;
    fail("InvalidSchema", "unknown column kind: " + name);
}

Table::Table(std::vector<ColumnSchema> schema) : schema_(std::move(schema)) {
    validate_schema(schema_);
    numeric_.resize(schema_.size());
    codes_.resize(schema_.size());
    categories_.resize(schema_.size());
    for (std::size_t c = 0; c < schema_.size(); ++c) {
        if (schema_[c].kind == ColumnKind::categorical) {
            categories_[c] = schema_[c].allowed_categories;
        }
    }
}

Index Table::column_index(const std::string& name) const {
    for (std::size_t c = 0; c < schema_.size(); ++c) {
        if (schema_[c].name == name) return static_cast<Index>(c);
    }
    fail("UnknownColumn", "no column named '" + name + "'");
}

bool Table::is_numeric_column(Index col) const {
    return column(col).kind != ColumnKind::categorical;
}

bool Table::is_null(Index row, Index col) const {
    const auto c = static_cast<std::size_t>(col);
    const auto r = static_cast<std::size_t>(row);
    if (is_numeric_column(col)) return std::isnan(numeric_[c][r]);
    return codes_[c][r] < 0;
}

double Table::number_at(Index row, Index col) const {
    if (!is_numeric_column(col)) {
        fail("NonNumericColumn", "column '" + column(col).name + "' is categorical");
    }
    return numeric_[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];
}

int Table::category_code_at(Index row, Index col) const {
    if (is_numeric_column(col)) {
        fail("NonCategoricalColumn", "column '" + column(col).name + "' is numeric");
    }
    return codes_[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];
}

const std::string& Table::category_at(Index row, Index col) const {
    const int code = category_code_at(row, col);
    if (code < 0) fail("NullPresent", "null category cell");
    return categories_[static_cast<std::size_t>(col)][static_cast<std::size_t>(code)];
}

Cell Table::cell(Index row, Index col) const {
    if (is_null(row, col)) return std::monostate{};
    if (is_numeric_column(col)) return number_at(row, col);
    return category_at(row, col);
}

const std::vector<std::string>& Table::categories(Index col) const {
    if (is_numeric_column(col)) {
        fail("NonCategoricalColumn", "column '" + column(col).name + "' is numeric");
    }
    return categories_[static_cast<std::size_t>(col)];
}

int Table::intern_category(Index col, const std::string& value) {
    auto& cats = categories_[static_cast<std::size_t>(col)];
    const auto it = std::find(cats.begin(), cats.end(), value);
    if (it != cats.end()) return static_cast<int>(it - cats.begin());
    cats.push_back(value);
    added_categories_.emplace_back(column(col).name, value);
    return static_cast<int>(cats.size()) - 1;
}

void Table::append_row(const std::vector<Cell>& cells) {
    if (cells.size() != schema_.size()) {
        fail("RowShapeMismatch", "row has " + std::to_string(cells.size()) + " cells, schema has " +
                                     std::to_string(schema_.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const bool numeric = is_numeric_column(static_cast<Index>(c));
        const Cell& cell = cells[c];
        if (std::holds_alternative<std::monostate>(cell)) {
            if (numeric) numeric_[c].push_back(kNull);
            else codes_[c].push_back(-1);
        } else if (std::holds_alternative<double>(cell)) {
            if (!numeric) fail("CellTypeMismatch", "number in categorical column " + schema_[c].name);
            numeric_[c].push_back(std::get<double>(cell));
        } else {
            if (numeric) fail("CellTypeMismatch", "string in numeric column " + schema_[c].name);
            codes_[c].push_back(intern_category(static_cast<Index>(c), std::get<std::string>(cell)));
        }
    }
    ++rows_;
}

void Table::set_number(Index row, Index col, double value) {
    if (!is_numeric_column(col)) {
        fail("NonNumericColumn", "column '" + column(col).name + "' is categorical");
    }
    numeric_[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)] = value;
}

Table Table::select_rows(const std::vector<Index>& rows) const {
    Table out(schema_);
    out.categories_ = categories_;
    for (std::size_t c = 0; c < schema_.size(); ++c) {
        if (is_numeric_column(static_cast<Index>(c))) out.numeric_[c].reserve(rows.size());
        else out.codes_[c].reserve(rows.size());
    }
    for (const Index r : rows) {
        for (std::size_t c = 0; c < schema_.size(); ++c) {
            if (is_numeric_column(static_cast<Index>(c))) {
                out.numeric_[c].push_back(numeric_[c][static_cast<std::size_t>(r)]);
            } else {
                out.codes_[c].push_back(codes_[c][static_cast<std::size_t>(r)]);
            }
        }
        ++out.rows_;
    }
    return out;
}

bool Table::rows_equal(Index a, Index b, const std::vector<Index>& columns) const {
    auto equal_at = [&](Index col) {
        const auto c = static_cast<std::size_t>(col);
        if (is_numeric_column(col)) {
            const double va = numeric_[c][static_cast<std::size_t>(a)];
            const double vb = numeric_[c][static_cast<std::size_t>(b)];
            if (std::isnan(va) || std::isnan(vb)) return std::isnan(va) && std::isnan(vb);
            return va == vb;
        }
        return codes_[c][static_cast<std::size_t>(a)] == codes_[c][static_cast<std::size_t>(b)];
    };
    if (columns.empty()) {
        for (Index c = 0; c < column_count(); ++c) {
            if (!equal_at(c)) return false;
        }
        return true;
    }
    return std::all_of(columns.begin(), columns.end(), equal_at);
}

Index Table::count_nulls(Index col) const {
    Index count = 0;
    for (Index r = 0; r < rows_; ++r) {
        if (is_null(r, col)) ++count;
    }
    return count;
}

namespace {

Table table_from_document(const csv::Document& doc, const std::vector<ColumnSchema>& schema) {
    validate_schema(schema);
    if (doc.header.size() != schema.size()) {
        fail("HeaderMismatch", "header has " + std::to_string(doc.header.size()) +
                                   " columns, schema expects " + std::to_string(schema.size()));
    }
    for (std::size_t c = 0; c < schema.size(); ++c) {
        if (doc.header[c] != schema[c].name) {
            fail("HeaderMismatch", "header column " + std::to_string(c + 1) + " is '" +
                                       doc.header[c] + "', schema expects '" + schema[c].name + "'");
        }
    }

    Table table(schema);
    std::vector<Cell> cells(schema.size());
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
        const auto& raw = doc.rows[r];
        if (raw.size() != schema.size()) {
            fail("RowShapeMismatch", "data row " + std::to_string(r + 1) + " has " +
                                         std::to_string(raw.size()) + " cells");
        }
        for (std::size_t c = 0; c < raw.size(); ++c) {
            const std::string& field = raw[c];
            if (is_null_token(field)) {
                cells[c] = std::monostate{};
                continue;
            }
            if (schema[c].kind == ColumnKind::categorical) {
                cells[c] = field;
                continue;
            }
            const auto value = parse_number(field);
            if (!value) {
                fail("UnparsableCell", "cannot parse '" + field + "' at row " +
                                           std::to_string(r + 1) + ", column '" + schema[c].name + "'");
            }
            cells[c] = *value;
        }
        table.append_row(cells);
    }
    return table;
}

} // namespace

Table load_csv(const std::string& path, const std::vector<ColumnSchema>& schema) {
    return table_from_document(csv::read_file(path), schema);
}

Table table_from_csv_text(const std::string& text, const std::vector<ColumnSchema>& schema) {
    return table_from_document(csv::read_string(text), schema);
}

std::vector<ColumnSchema> stroke_schema() {
    return {
        {"id", ColumnKind::integer, {}},
        {"gender", ColumnKind::categorical, {"Female", "Male", "Other"}},
        {"age", ColumnKind::real, {}},
        {"hypertension", ColumnKind::integer, {}},
        {"heart_disease", ColumnKind::integer, {}},
        {"ever_married", ColumnKind::categorical, {"No", "Yes"}},
        {"work_type",
         ColumnKind::categorical,
         {"Govt_job", "Never_worked", "Private", "Self-employed", "children"}},
        {"residence_type", ColumnKind::categorical, {"Rural", "Urban"}},
        {"avg_glucose_level", ColumnKind::real, {}},
        {"bmi", ColumnKind::real, {}},
        {"smoking_status",
         ColumnKind::categorical,
         {"Unknown", "formerly smoked", "never smoked", "smokes"}},
        {"stroke", ColumnKind::binary_target, {}},
    };
}

std::vector<ColumnSchema> schema_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("MissingFile", "cannot open schema file " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        fail("InvalidSchema", std::string("schema json parse error: ") + e.what());
    }
    if (!doc.is_array()) fail("InvalidSchema", "schema file must hold a json array");
    std::vector<ColumnSchema> schema;
    for (const auto& item : doc) {
        ColumnSchema col;
        col.name = item.at("name").get<std::string>();
        col.kind = column_kind_from_name(item.at("kind").get<std::string>());
        if (item.contains("categories")) {
            col.allowed_categories = item.at("categories").get<std::vector<std::string>>();
        }
        schema.push_back(std::move(col));
    }
    validate_schema(schema);
    return schema;
}

std::string schema_to_json(const std::vector<ColumnSchema>& schema) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& col : schema) {
        nlohmann::json item;
        item["name"] = col.name;
        item["kind"] = column_kind_name(col.kind);
        if (!col.allowed_categories.empty()) item["categories"] = col.allowed_categories;
        doc.push_back(std::move(item));
    }
    return doc.dump(2);
}

} // namespace tabforge::core
