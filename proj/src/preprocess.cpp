#include "tabforge/preprocess.hpp"

#include "tabforge/csv.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace tabforge::preprocess {

std::pair<Table, Index> impute_nulls(const Table& table, const ImputationPolicy& policy) {
    const Index col = table.column_index(policy.column);
    if (!table.is_numeric_column(col)) {
        fail("NonNumericColumn", "imputation column '" + policy.column + "' is categorical");
    }

    double replacement = policy.constant_value;
    if (policy.strategy == ImputationPolicy::Strategy::mean) {
        double sum = 0.0;
        Index count = 0;
        for (Index r = 0; r < table.row_count(); ++r) {
            if (!table.is_null(r, col)) {
                sum += table.number_at(r, col);
                ++count;
            }
        }
        if (count == 0) fail("AllNull", "column '" + policy.column + "' has no non-null values");
        replacement = sum / static_cast<double>(count);
    }

    Table out = table;
    Index replaced = 0;
    for (Index r = 0; r < out.row_count(); ++r) {
        if (out.is_null(r, col)) {
            out.set_number(r, col, replacement);
            ++replaced;
        }
    }
    return {std::move(out), replaced};
}

std::pair<Table, Index> drop_outliers(const Table& table, const OutlierRule& rule) {
    if (!(rule.lower_bound < rule.upper_bound)) {
        fail("InvalidBounds", "outlier rule needs lower_bound < upper_bound");
    }
    const Index col = table.column_index(rule.column);
    if (!table.is_numeric_column(col)) {
        fail("NonNumericColumn", "outlier column '" + rule.column + "' is categorical");
    }

    auto offending = [&](Index r) {
        if (table.is_null(r, col)) return false;
        const double v = table.number_at(r, col);
        return v > rule.upper_bound || v < rule.lower_bound;
    };

    if (rule.replace_instead_of_drop) {
        Table out = table;
        Index affected = 0;
        for (Index r = 0; r < out.row_count(); ++r) {
            if (offending(r)) {
                out.set_number(r, col, rule.replacement_value);
                ++affected;
            }
        }
        return {std::move(out), affected};
    }

    std::vector<Index> keep;
    keep.reserve(static_cast<std::size_t>(table.row_count()));
    Index dropped = 0;
    for (Index r = 0; r < table.row_count(); ++r) {
        if (offending(r)) ++dropped;
        else keep.push_back(r);
    }
    return {table.select_rows(keep), dropped};
}

std::vector<std::pair<Index, Index>> find_duplicates(const Table& table,
                                                     const std::vector<std::string>& subset) {
    std::vector<Index> columns;
    columns.reserve(subset.size());
    for (const auto& name : subset) columns.push_back(table.column_index(name));

    // hash-bucket candidate rows, then confirm cell-wise
    auto row_hash = [&](Index r) {
        std::size_t h = 0xcbf29ce484222325ULL;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 0x100000001b3ULL;
        };
        const auto& cols = columns;
        const Index m = table.column_count();
        for (Index c = 0; c < (cols.empty() ? m : static_cast<Index>(cols.size())); ++c) {
            const Index col = cols.empty() ? c : cols[static_cast<std::size_t>(c)];
            if (table.is_null(r, col)) {
                mix(0x9e37ULL);
            } else if (table.is_numeric_column(col)) {
                double v = table.number_at(r, col);
                if (v == 0.0) v = 0.0; // collapse -0.0
                std::uint64_t bits;
                std::memcpy(&bits, &v, sizeof bits);
                mix(bits);
            } else {
                mix(static_cast<std::uint64_t>(table.category_code_at(r, col)) + 1);
            }
        }
        return h;
    };

    std::unordered_map<std::size_t, std::vector<Index>> buckets;
    for (Index r = 0; r < table.row_count(); ++r) buckets[row_hash(r)].push_back(r);

    std::vector<std::pair<Index, Index>> pairs;
    for (auto& [hash, rows] : buckets) {
        (void)hash;
        if (rows.size() < 2) continue;
        for (std::size_t a = 0; a + 1 < rows.size(); ++a) {
            for (std::size_t b = a + 1; b < rows.size(); ++b) {
                if (table.rows_equal(rows[a], rows[b], columns)) {
                    pairs.emplace_back(rows[a], rows[b]);
                }
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::pair<Table, std::pair<double, double>> normalize_minmax(const Table& table,
                                                             const std::string& column) {
    const Index col = table.column_index(column);
    if (!table.is_numeric_column(col)) {
        fail("NonNumericColumn", "normalization column '" + column + "' is categorical");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (Index r = 0; r < table.row_count(); ++r) {
        if (table.is_null(r, col)) {
            fail("NullPresent", "column '" + column + "' has nulls; impute before normalizing");
        }
        lo = std::min(lo, table.number_at(r, col));
        hi = std::max(hi, table.number_at(r, col));
    }
    if (table.row_count() == 0) fail("EmptyTable", "cannot normalize an empty column");

    Table out = table;
    const double span = hi - lo;
    for (Index r = 0; r < out.row_count(); ++r) {
        const double v = out.number_at(r, col);
        out.set_number(r, col, span > 0.0 ? (v - lo) / span : 0.0);
    }
    return {std::move(out), {lo, hi}};
}

Histogram histogram(const Table& table, const std::string& column, Index bin_count) {
    const Index col = table.column_index(column);
    Histogram hist;
    hist.column = column;

    if (!table.is_numeric_column(col)) {
        const auto& cats = table.categories(col);
        hist.frequencies.assign(cats.size(), 0);
        hist.labels = cats;
        for (Index k = 0; k <= static_cast<Index>(cats.size()); ++k) {
            hist.bin_edges.push_back(static_cast<double>(k));
        }
        for (Index r = 0; r < table.row_count(); ++r) {
            const int code = table.category_code_at(r, col);
            if (code >= 0) ++hist.frequencies[static_cast<std::size_t>(code)];
        }
        return hist;
    }

    if (bin_count <= 0) fail("ZeroBins", "histogram needs at least one bin");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    Index non_null = 0;
    for (Index r = 0; r < table.row_count(); ++r) {
        if (table.is_null(r, col)) continue;
        const double v = table.number_at(r, col);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        ++non_null;
    }
    if (non_null == 0) {
        hist.bin_edges = {0.0, 1.0};
        hist.frequencies.assign(1, 0);
        return hist;
    }
    if (hi == lo) hi = lo + 1.0; // degenerate spread: single bin holds everything

    hist.frequencies.assign(static_cast<std::size_t>(bin_count), 0);
    const double width = (hi - lo) / static_cast<double>(bin_count);
    for (Index k = 0; k <= bin_count; ++k) {
        hist.bin_edges.push_back(lo + width * static_cast<double>(k));
    }
    hist.bin_edges.back() = hi;

    for (Index r = 0; r < table.row_count(); ++r) {
        if (table.is_null(r, col)) continue;
        const double v = table.number_at(r, col);
        auto bin = static_cast<Index>((v - lo) / width);
        bin = std::clamp<Index>(bin, 0, bin_count - 1); // rightmost bin closed
        ++hist.frequencies[static_cast<std::size_t>(bin)];
    }
    return hist;
}

CorrelationMatrix correlation_matrix(const EncodedMatrix& matrix) {
    const Index m = matrix.feature_count();
    const Index n = matrix.rows();
    CorrelationMatrix out;
    out.values = Matrix::Zero(m, m);
    out.constant_flag.assign(static_cast<std::size_t>(m), false);
    if (n == 0) return out;

    Matrix centered = matrix.features;
    Vector norms(m);
    for (Index j = 0; j < m; ++j) {
        centered.col(j).array() -= centered.col(j).mean();
        norms[j] = centered.col(j).norm();
        if (norms[j] == 0.0) out.constant_flag[static_cast<std::size_t>(j)] = true;
    }
    for (Index a = 0; a < m; ++a) {
        if (out.constant_flag[static_cast<std::size_t>(a)]) continue;
        out.values(a, a) = 1.0;
        for (Index b = a + 1; b < m; ++b) {
            if (out.constant_flag[static_cast<std::size_t>(b)]) continue;
            const double r = centered.col(a).dot(centered.col(b)) / (norms[a] * norms[b]);
            out.values(a, b) = r;
            out.values(b, a) = r;
        }
    }
    return out;
}

std::string report_to_json(const PreprocessReport& report) {
    nlohmann::json doc;
    doc["imputed_count"] = report.imputed_count;
    doc["dropped_rows"] = report.dropped_rows;
    doc["duplicate_rows"] = report.duplicate_rows;
    nlohmann::json bounds = nlohmann::json::object();
    for (const auto& [column, b] : report.normalization_bounds) {
        bounds[column] = {{"min", b.first}, {"max", b.second}};
    }
    doc["normalization_bounds"] = std::move(bounds);
    return doc.dump(2);
}

std::string histogram_to_json(const Histogram& hist) {
    nlohmann::json doc;
    doc["column"] = hist.column;
    doc["bin_edges"] = hist.bin_edges;
    doc["frequencies"] = hist.frequencies;
    if (!hist.labels.empty()) doc["labels"] = hist.labels;
    return doc.dump(2);
}

std::string histogram_to_csv(const Histogram& hist) {
    std::ostringstream out;
    out << "bin_midpoint,frequency\n";
    for (std::size_t k = 0; k < hist.frequencies.size(); ++k) {
        const double mid = 0.5 * (hist.bin_edges[k] + hist.bin_edges[k + 1]);
        out << mid << ',' << hist.frequencies[k] << '\n';
    }
    return out.str();
}

std::string correlation_to_csv(const CorrelationMatrix& corr,
                               const std::vector<std::string>& names) {
    std::ostringstream out;
    out << "feature";
    for (const auto& name : names) out << ',' << csv::escape_field(name);
    out << '\n';
    out.precision(17);
    for (Index a = 0; a < corr.values.rows(); ++a) {
        out << csv::escape_field(names[static_cast<std::size_t>(a)]);
        for (Index b = 0; b < corr.values.cols(); ++b) out << ',' << corr.values(a, b);
        out << '\n';
    }
    return out.str();
}

} // namespace tabforge::preprocess
