#pragma once

#include "tabforge/common.hpp"
#include "tabforge/encode.hpp"
#include "tabforge/table.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tabforge::preprocess {

using core::EncodedMatrix;
using core::Table;

struct ImputationPolicy {
    enum class Strategy { mean, constant };
    std::string column;
    Strategy strategy = Strategy::mean;
    double constant_value = 0.0;
};

struct OutlierRule {
    std::string column;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    /// false drops offending rows, true replaces the offending value instead
    bool replace_instead_of_drop = false;
    double replacement_value = 0.0;
};

struct PreprocessReport {
    std::map<std::string, Index> imputed_count;
    Index dropped_rows = 0;
    Index duplicate_rows = 0;
    std::map<std::string, std::pair<double, double>> normalization_bounds;
};

struct Histogram {
    std::string column;
    std::vector<double> bin_edges;   // k + 1 ascending edges
    std::vector<Index> frequencies;  // k counts
    std::vector<std::string> labels; // per-bin category names (categorical only)
};

/// Replaces nulls in one column by the mean of its non-null values or by a
/// constant. Returns the updated table and the number of cells replaced.
std::pair<Table, Index> impute_nulls(const Table& table, const ImputationPolicy& policy);

/// Removes (or rewrites) cells strictly outside (lower_bound, upper_bound).
/// Surviving rows keep their order. Returns the count of rows affected.
std::pair<Table, Index> drop_outliers(const Table& table, const OutlierRule& rule);

/// Every unordered row pair (i, j), i < j, equal on all columns or on the
/// given subset. Null cells compare equal to null cells.
std::vector<std::pair<Index, Index>> find_duplicates(const Table& table,
                                                     const std::vector<std::string>& subset = {});

/// Min-max scaling of one numeric column to [0, 1]; a constant column maps to
/// all zeros. Returns the (min, max) used.
std::pair<Table, std::pair<double, double>> normalize_minmax(const Table& table,
                                                             const std::string& column);

/// Equal-width bins over [min, max], rightmost bin closed on both ends.
/// Categorical columns get one bin per category regardless of bin_count.
Histogram histogram(const Table& table, const std::string& column, Index bin_count);

struct CorrelationMatrix {
    Matrix values;                    // m x m, symmetric
    std::vector<bool> constant_flag;  // true where the feature had zero variance
};

/// Pairwise Pearson correlation of the encoded features. Constant columns are
/// flagged and emitted as zero rows/columns rather than failing.
CorrelationMatrix correlation_matrix(const EncodedMatrix& matrix);

std::string report_to_json(const PreprocessReport& report);
std::string histogram_to_json(const Histogram& hist);
/// Two-column plot data: bin_midpoint, frequency.
std::string histogram_to_csv(const Histogram& hist);
std::string correlation_to_csv(const CorrelationMatrix& corr,
                               const std::vector<std::string>& names);

} // namespace tabforge::preprocess
