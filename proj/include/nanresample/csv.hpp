#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nanresample/dataset.hpp"

namespace nanresample {

struct ResampleResult;

struct CsvOptions {
    /// Trimmed field values read as missing.
    std::vector<std::string> missing_tokens_in{"", "NaN", "nan", "NA"};
    /// Written for missing cells. Must not parse as a number.
    std::string missing_token_out;
    char delimiter = ',';
    bool has_header = true;

    /// Throws Error when missing_token_out is numeric or contains the
    /// delimiter, a quote or a line break, or when the delimiter is a quote
    /// or line break.
    void validate() const;
};

/// Label column given by header name or by index; negative indices count
/// from the end (-1 is the last column).
using LabelColumn = std::variant<std::string, long>;

/// Resolves a command-line label argument: a header name if one matches,
/// otherwise an integer index.
LabelColumn parse_label_column(std::string_view text);

LabeledDataset parse_csv(std::string_view text, const LabelColumn& label,
                         const CsvOptions& options = {});

/// Reads a whole file. Errors name the offending line and column.
LabeledDataset read_csv(const std::filesystem::path& path, const LabelColumn& label,
                        const CsvOptions& options = {});

/// Writes features and labels with the label column back in its original
/// position. Numbers use the shortest decimal form that round-trips.
void write_csv(std::ostream& out, const LabeledDataset& dataset, const CsvOptions& options = {});
void write_csv(const LabeledDataset& dataset, const std::filesystem::path& path,
               const CsvOptions& options = {});
void write_csv(const ResampleResult& result, const std::filesystem::path& path,
               const CsvOptions& options = {});

/// Shortest round-trip decimal text for a finite double.
std::string format_number(double value);

}  // namespace nanresample
