#include "dimred/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "dimred/error.hpp"
#include "dimred/format.hpp"

namespace dimred {

Dataset::Dataset(std::vector<std::string> ids, std::vector<std::string> feature_names, Matrix values)
    : ids_(std::move(ids)), feature_names_(std::move(feature_names)), values_(std::move(values)) {
    if (values_.cols() != static_cast<Eigen::Index>(feature_names_.size())) {
        throw SchemaError("feature name count does not match column count");
    }
    if (values_.rows() != static_cast<Eigen::Index>(ids_.size())) {
        throw SchemaError("row id count does not match row count");
    }
    if (values_.cols() < 2) {
        throw SchemaError("dataset needs at least 2 features, got " + std::to_string(values_.cols()));
    }
    if (values_.rows() < values_.cols()) {
        throw SchemaError("dataset needs at least as many samples (" + std::to_string(values_.rows()) +
                          ") as features (" + std::to_string(values_.cols()) + ")");
    }
    if (!values_.allFinite()) {
        throw IngestionError("dataset contains non-finite values");
    }
    std::set<std::string> seen;
    for (const auto& name : feature_names_) {
        if (!seen.insert(name).second) {
            throw SchemaError("duplicate feature name '" + name + "'");
        }
    }
}

Dataset Dataset::select_columns(const std::vector<int>& columns) const {
    Matrix out(values_.rows(), static_cast<Eigen::Index>(columns.size()));
    std::vector<std::string> names;
    names.reserve(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const int src = columns[c];
        if (src < 0 || src >= values_.cols()) {
            throw ParameterError("column index " + std::to_string(src) + " out of range");
        }
        out.col(static_cast<Eigen::Index>(c)) = values_.col(src);
        names.push_back(feature_names_[static_cast<std::size_t>(src)]);
    }
    return Dataset(ids_, std::move(names), std::move(out));
}

std::vector<std::string> split_csv_record(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(ch);
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field.push_back(ch);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

bool parse_real(const std::string& text, double& out) {
    const std::string cell = trim(text);
    if (cell.empty()) return false;
    const char* begin = cell.data();
    const char* end = cell.data() + cell.size();
    if (*begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

}  // namespace

Dataset parse_csv(std::istream& in, const std::string& source_name) {
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            // strip UTF-8 BOM on the header
            if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
            if (!trim(line).empty()) return true;
        }
        return false;
    };

    if (!next_line()) {
        throw IngestionError(source_name + ": missing header row");
    }
    auto header = split_csv_record(line);
    if (header.size() < 3) {
        throw SchemaError(source_name + ": header must have an id column and at least 2 feature columns");
    }
    std::vector<std::string> names;
    for (std::size_t c = 1; c < header.size(); ++c) names.push_back(trim(header[c]));
    {
        std::set<std::string> seen;
        for (const auto& n : names) {
            if (!seen.insert(n).second) {
                throw SchemaError(source_name + ": duplicate header name '" + n + "'");
            }
        }
    }

    const std::size_t width = header.size();
    std::vector<std::string> ids;
    std::vector<double> cells;
    while (next_line()) {
        auto fields = split_csv_record(line);
        if (fields.size() != width) {
            throw IngestionError(source_name + ": line " + std::to_string(line_no) + " has " +
                                 std::to_string(fields.size()) + " fields, expected " +
                                 std::to_string(width));
        }
        ids.push_back(trim(fields[0]));
        for (std::size_t c = 1; c < width; ++c) {
            double v = 0.0;
            if (!parse_real(fields[c], v)) {
                throw IngestionError(source_name + ": line " + std::to_string(line_no) + ", row '" +
                                     ids.back() + "', column '" + names[c - 1] +
                                     "': cannot parse '" + fields[c] + "' as a finite number");
            }
            cells.push_back(v);
        }
    }

    const auto rows = static_cast<Eigen::Index>(ids.size());
    const auto cols = static_cast<Eigen::Index>(names.size());
    Matrix values = Eigen::Map<Matrix>(cells.data(), rows, cols);
    return Dataset(std::move(ids), std::move(names), std::move(values));
}

Dataset load_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    return parse_csv(in, path.string());
}

void write_csv(std::ostream& out, const Dataset& data) {
    out << "id";
    for (const auto& name : data.feature_names()) out << ',' << csv_field(name);
    out << '\n';
    for (Eigen::Index i = 0; i < data.n_samples(); ++i) {
        out << csv_field(data.ids()[static_cast<std::size_t>(i)]);
        for (Eigen::Index c = 0; c < data.n_features(); ++c) out << ',' << format_real(data.values()(i, c));
        out << '\n';
    }
}

Matrix minmax_columns(const Matrix& values) {
    Matrix out(values.rows(), values.cols());
    for (Eigen::Index c = 0; c < values.cols(); ++c) {
        const double lo = values.col(c).minCoeff();
        const double hi = values.col(c).maxCoeff();
        const double range = hi - lo;
        if (range > 0.0) {
            out.col(c) = (values.col(c).array() - lo) / range;
        } else {
            out.col(c).setZero();
        }
    }
    return out;
}

NormalizedDataset minmax_normalize(const Dataset& data) {
    std::vector<std::string> warnings;
    const Matrix& v = data.values();
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
        if (v.col(c).minCoeff() == v.col(c).maxCoeff()) {
            warnings.push_back("constant column '" + data.feature_names()[static_cast<std::size_t>(c)] +
                               "' mapped to 0");
        }
    }
    return {Dataset(data.ids(), data.feature_names(), minmax_columns(v)), std::move(warnings)};
}

}  // namespace dimred
