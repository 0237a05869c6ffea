#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dimred/matrix.hpp"

namespace dimred {

/**
 * @brief Rectangular numeric table with row identifiers and named feature columns.
 *
 * A constructed Dataset always satisfies: at least two features, at least as
 * many samples as features, finite values, and unique feature names.
 */
class Dataset {
public:
    Dataset(std::vector<std::string> ids, std::vector<std::string> feature_names, Matrix values);

    const std::vector<std::string>& ids() const { return ids_; }
    const std::vector<std::string>& feature_names() const { return feature_names_; }
    const Matrix& values() const { return values_; }

    Eigen::Index n_samples() const { return values_.rows(); }
    Eigen::Index n_features() const { return values_.cols(); }

    /// New dataset holding only the given columns, in the given order.
    Dataset select_columns(const std::vector<int>& columns) const;

private:
    std::vector<std::string> ids_;
    std::vector<std::string> feature_names_;
    Matrix values_;
};

/// Result of MinMax normalization. `warnings` names every constant column.
struct NormalizedDataset {
    Dataset data;
    std::vector<std::string> warnings;
};

/**
 * Parse a comma-separated file: mandatory header, first column is the row id,
 * remaining columns are real numbers with '.' as decimal point.
 *
 * Throws IngestionError (naming the line, and the column for bad cells) or
 * SchemaError (duplicate or too few header names).
 */
Dataset load_csv(const std::filesystem::path& path);
Dataset parse_csv(std::istream& in, const std::string& source_name = "<stream>");

/// Write in the same dialect load_csv reads; the id column header is "id".
void write_csv(std::ostream& out, const Dataset& data);

/// Split one CSV record. Double-quoted fields may contain commas; "" escapes a quote.
std::vector<std::string> split_csv_record(const std::string& line);

/// Map each column to [0, 1] via (x - min) / (max - min). Constant columns become 0.
NormalizedDataset minmax_normalize(const Dataset& data);

/// Column-wise MinMax of a bare matrix, with the same constant-column rule.
Matrix minmax_columns(const Matrix& values);

}  // namespace dimred
