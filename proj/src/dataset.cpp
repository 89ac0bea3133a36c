#include "nanresample/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "nanresample/error.hpp"

namespace nanresample {

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (rows_ == 0 || cols_ == 0) {
        throw Error("feature matrix must have at least one row and one column");
    }
    if (cells_.size() != rows_ * cols_) {
        throw Error("feature matrix is not rectangular");
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (std::isinf(cells_[i])) {
            throw Error("infinite value at row " + std::to_string(i / cols_) + ", column " +
                        std::to_string(i % cols_));
        }
    }
}

FeatureMatrix FeatureMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<std::vector<double>> copy;
    copy.reserve(rows.size());
    for (const auto& r : rows) copy.emplace_back(r);
    return from_rows(copy);
}

FeatureMatrix FeatureMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t d = rows.empty() ? 0 : rows.front().size();
    std::vector<double> cells;
    cells.reserve(rows.size() * d);
    for (const auto& r : rows) {
        if (r.size() != d) throw Error("feature matrix is not rectangular");
        cells.insert(cells.end(), r.begin(), r.end());
    }
    return FeatureMatrix(rows.size(), d, std::move(cells));
}

bool FeatureMatrix::same_cells(const FeatureMatrix& other) const noexcept {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    return std::equal(cells_.begin(), cells_.end(), other.cells_.begin(),
                      [](double a, double b) {
                          return is_missing(a) ? is_missing(b) : (!is_missing(b) && a == b);
                      });
}

ClassLabel::ClassLabel(std::string text) : text_(std::move(text)) {
    double value = 0.0;
    const char* first = text_.data();
    const char* last = first + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc() && ptr == last && std::isfinite(value)) numeric_ = value;
}

ClassLabel::ClassLabel(long long value) : ClassLabel(std::to_string(value)) {}

std::strong_ordering ClassLabel::operator<=>(const ClassLabel& other) const noexcept {
    if (numeric_ && other.numeric_) {
        if (*numeric_ < *other.numeric_) return std::strong_ordering::less;
        if (*numeric_ > *other.numeric_) return std::strong_ordering::greater;
        return text_ <=> other.text_;
    }
    if (numeric_) return std::strong_ordering::less;
    if (other.numeric_) return std::strong_ordering::greater;
    return text_ <=> other.text_;
}

LabeledDataset::LabeledDataset(FeatureMatrix features_, std::vector<ClassLabel> labels_,
                               std::optional<std::vector<std::string>> column_names_,
                               std::optional<std::string> label_name_,
                               std::optional<std::size_t> label_position_)
    : features(std::move(features_)),
      labels(std::move(labels_)),
      column_names(std::move(column_names_)),
      label_name(std::move(label_name_)),
      label_position(label_position_.value_or(features.cols())) {
    if (labels.size() != features.rows()) {
        throw Error("label count " + std::to_string(labels.size()) + " does not match row count " +
                    std::to_string(features.rows()));
    }
    if (column_names) {
        if (column_names->size() != features.cols()) {
            throw Error("column name count does not match feature count");
        }
        std::set<std::string> seen(column_names->begin(), column_names->end());
        if (seen.size() != column_names->size()) throw Error("duplicate column name");
    }
    if (label_position > features.cols()) throw Error("label position out of range");
}

ClassPartition partition_by_class(const LabeledDataset& dataset) {
    ClassPartition groups;
    for (std::size_t i = 0; i < dataset.labels.size(); ++i) {
        groups[dataset.labels[i]].push_back(i);
    }
    return groups;
}

MissingnessProfile missingness_profile(const LabeledDataset& dataset,
                                       const ClassPartition& partition) {
    const auto& x = dataset.features;
    MissingnessProfile profile;
    for (const auto& [label, rows] : partition) {
        std::vector<std::size_t> missing(x.cols(), 0);
        for (std::size_t i : rows) {
            for (std::size_t k = 0; k < x.cols(); ++k) missing[k] += x.missing(i, k) ? 1 : 0;
        }
        std::vector<double> rates(x.cols());
        for (std::size_t k = 0; k < x.cols(); ++k) {
            rates[k] = static_cast<double>(missing[k]) / static_cast<double>(rows.size());
        }
        profile.rates.emplace(label, std::move(rates));
    }
    return profile;
}

double nan_rate(const FeatureMatrix& matrix) { return nan_rate(matrix, 0, matrix.rows()); }

double nan_rate(const FeatureMatrix& matrix, std::size_t first, std::size_t last) {
    if (last <= first) return 0.0;
    const auto cells = matrix.cells().subspan(first * matrix.cols(), (last - first) * matrix.cols());
    const auto missing = std::count_if(cells.begin(), cells.end(), is_missing);
    return static_cast<double>(missing) / static_cast<double>(cells.size());
}

std::map<ClassLabel, std::size_t> class_counts(const ClassPartition& partition) {
    std::map<ClassLabel, std::size_t> counts;
    for (const auto& [label, rows] : partition) counts.emplace(label, rows.size());
    return counts;
}

}  // namespace nanresample
