#pragma once

#include <cmath>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nanresample {

/// Marker stored in a FeatureMatrix cell that has no observed value.
inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

inline bool is_missing(double v) noexcept { return std::isnan(v); }

/// Dense row-major N x d grid. Missing cells hold a quiet NaN; observed cells
/// are always finite.
class FeatureMatrix {
public:
    /// Throws Error when rows or cols is zero, when cells.size() != rows*cols,
    /// or when any cell is infinite.
    FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> cells);

    static FeatureMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static FeatureMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::span<const double> row(std::size_t i) const noexcept {
        return {cells_.data() + i * cols_, cols_};
    }
    double at(std::size_t i, std::size_t k) const noexcept { return cells_[i * cols_ + k]; }
    bool missing(std::size_t i, std::size_t k) const noexcept { return is_missing(at(i, k)); }

    std::span<const double> cells() const noexcept { return cells_; }

    /// Cell-for-cell equality where two missing cells compare equal.
    bool same_cells(const FeatureMatrix& other) const noexcept;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> cells_;
};

/// Class identifier as it appeared in the input. Ordering is numeric when both
/// sides parse as decimal numbers, numeric labels sort before non-numeric ones,
/// and non-numeric labels compare lexicographically.
class ClassLabel {
public:
    ClassLabel() = default;
    explicit ClassLabel(std::string text);
    ClassLabel(long long value);  // NOLINT(google-explicit-constructor)

    const std::string& text() const noexcept { return text_; }
    std::optional<double> numeric() const noexcept { return numeric_; }

    std::strong_ordering operator<=>(const ClassLabel& other) const noexcept;
    bool operator==(const ClassLabel& other) const noexcept { return text_ == other.text_; }

private:
    std::string text_;
    std::optional<double> numeric_;
};

struct LabeledDataset {
    /// Throws Error when the label count does not match the row count, when
    /// column names are the wrong length or repeat, or when label_position > d.
    LabeledDataset(FeatureMatrix features, std::vector<ClassLabel> labels,
                   std::optional<std::vector<std::string>> column_names = std::nullopt,
                   std::optional<std::string> label_name = std::nullopt,
                   std::optional<std::size_t> label_position = std::nullopt);

    FeatureMatrix features;
    std::vector<ClassLabel> labels;
    std::optional<std::vector<std::string>> column_names;
    std::optional<std::string> label_name;
    /// Column index the label occupied in the source table (0..d). Defaults to d.
    std::size_t label_position;
};

/// Row indices grouped by class, iterated in ascending class order.
using ClassPartition = std::map<ClassLabel, std::vector<std::size_t>>;

/// Per-class, per-feature fraction of missing cells.
struct MissingnessProfile {
    std::map<ClassLabel, std::vector<double>> rates;
};

ClassPartition partition_by_class(const LabeledDataset& dataset);

MissingnessProfile missingness_profile(const LabeledDataset& dataset,
                                       const ClassPartition& partition);

/// Fraction of missing cells over the whole matrix.
double nan_rate(const FeatureMatrix& matrix);

/// Fraction of missing cells in rows [first, last).
double nan_rate(const FeatureMatrix& matrix, std::size_t first, std::size_t last);

std::map<ClassLabel, std::size_t> class_counts(const ClassPartition& partition);

}  // namespace nanresample
