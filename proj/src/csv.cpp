#include "nanresample/csv.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nanresample/error.hpp"
#include "nanresample/resample.hpp"

namespace nanresample {

namespace {

struct Record {
    std::size_t line = 0;  // 1-based line where the record starts
    std::vector<std::string> fields;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

bool parses_as_number(std::string_view s, double& value) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc() && ptr == s.data() + s.size();
}

// RFC 4180 style: quoted fields may hold delimiters, doubled quotes and line
// breaks. Lines that are completely empty are skipped.
std::vector<Record> tokenize(std::string_view text, char delim) {
    std::vector<Record> records;
    Record current;
    std::string field;
    bool in_quotes = false;
    bool record_has_content = false;
    std::size_t line = 1;
    current.line = line;

    const auto finish_record = [&] {
        if (record_has_content) {
            current.fields.push_back(std::move(field));
            records.push_back(std::move(current));
        }
        current = Record{};
        field.clear();
        record_has_content = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        if (c == '"') {
            in_quotes = true;
            record_has_content = true;
        } else if (c == delim) {
            current.fields.push_back(std::move(field));
            field.clear();
            record_has_content = true;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            finish_record();
            ++line;
            current.line = line;
        } else {
            if (!record_has_content) current.line = line;
            field.push_back(c);
            record_has_content = true;
        }
    }
    if (in_quotes) throw Error("unterminated quoted field starting near line " + std::to_string(current.line));
    finish_record();
    return records;
}

std::size_t resolve_label(const LabelColumn& label, const std::vector<std::string>* header,
                          std::size_t width) {
    if (const auto* name = std::get_if<std::string>(&label)) {
        if (!header) throw Error("label column '" + *name + "' given by name but file has no header");
        const auto it = std::find(header->begin(), header->end(), *name);
        if (it == header->end()) throw Error("label column '" + *name + "' not found in header");
        return static_cast<std::size_t>(it - header->begin());
    }
    const long index = std::get<long>(label);
    const long resolved = index < 0 ? static_cast<long>(width) + index : index;
    if (resolved < 0 || resolved >= static_cast<long>(width)) {
        throw Error("label column index " + std::to_string(index) + " out of range");
    }
    return static_cast<std::size_t>(resolved);
}

bool needs_quotes(std::string_view s, char delim) {
    if (s.empty()) return false;
    if (s.front() == ' ' || s.front() == '\t' || s.back() == ' ' || s.back() == '\t') return true;
    return s.find_first_of(std::string{delim, '"', '\n', '\r'}) != std::string_view::npos;
}

void write_field(std::ostream& out, std::string_view s, char delim) {
    if (!needs_quotes(s, delim)) {
        out << s;
        return;
    }
    out << '"';
    for (char c : s) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

}  // namespace

void CsvOptions::validate() const {
    if (delimiter == '"' || delimiter == '\n' || delimiter == '\r') {
        throw Error("invalid CSV delimiter");
    }
    double value = 0.0;
    if (parses_as_number(missing_token_out, value)) {
        throw Error("missing-value output token '" + missing_token_out + "' parses as a number");
    }
    if (missing_token_out.find_first_of(std::string{delimiter, '"', '\n', '\r'}) != std::string::npos) {
        throw Error("missing-value output token contains a reserved character");
    }
}

LabelColumn parse_label_column(std::string_view text) {
    long index = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), index);
    if (ec == std::errc() && ptr == text.data() + text.size()) return index;
    return std::string(text);
}

LabeledDataset parse_csv(std::string_view text, const LabelColumn& label, const CsvOptions& options) {
    options.validate();
    auto records = tokenize(text, options.delimiter);
    if (records.empty()) throw Error("CSV input is empty");

    std::optional<std::vector<std::string>> header;
    std::size_t first_data = 0;
    if (options.has_header) {
        header = std::move(records.front().fields);
        first_data = 1;
    }
    const std::size_t width = header ? header->size() : records.front().fields.size();
    if (width < 2) throw Error("CSV needs a label column and at least one feature column");

    // A label given by name may also be an integer-looking header.
    LabelColumn effective = label;
    if (const auto* idx = std::get_if<long>(&label); idx && header) {
        const auto name = std::to_string(*idx);
        if (std::find(header->begin(), header->end(), name) != header->end()) effective = name;
    }
    const std::size_t label_col = resolve_label(effective, header ? &*header : nullptr, width);

    const std::size_t n = records.size() - first_data;
    if (n == 0) throw Error("CSV has no data rows");
    const std::size_t d = width - 1;
    std::vector<double> cells;
    cells.reserve(n * d);
    std::vector<ClassLabel> labels;
    labels.reserve(n);

    const auto is_missing_token = [&](std::string_view s) {
        return std::find(options.missing_tokens_in.begin(), options.missing_tokens_in.end(), s) !=
               options.missing_tokens_in.end();
    };
    const auto where = [&](const Record& r, std::size_t col) {
        std::string s = "line " + std::to_string(r.line) + ", column " + std::to_string(col + 1);
        if (header) s += " ('" + (*header)[col] + "')";
        return s;
    };

    for (std::size_t r = first_data; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.fields.size() != width) {
            throw Error("line " + std::to_string(rec.line) + " has " + std::to_string(rec.fields.size()) +
                        " fields, expected " + std::to_string(width));
        }
        for (std::size_t c = 0; c < width; ++c) {
            const auto value_text = trim(rec.fields[c]);
            if (c == label_col) {
                if (is_missing_token(value_text)) throw Error("missing label at " + where(rec, c));
                labels.emplace_back(std::string(value_text));
                continue;
            }
            if (is_missing_token(value_text)) {
                cells.push_back(kMissing);
                continue;
            }
            double value = 0.0;
            if (!parses_as_number(value_text, value) || std::isnan(value)) {
                throw Error("cannot parse '" + std::string(value_text) + "' as a number at " + where(rec, c));
            }
            if (std::isinf(value)) throw Error("infinite value at " + where(rec, c));
            cells.push_back(value);
        }
    }

    std::optional<std::vector<std::string>> column_names;
    std::optional<std::string> label_name;
    if (header) {
        label_name = (*header)[label_col];
        column_names.emplace();
        for (std::size_t c = 0; c < width; ++c) {
            if (c != label_col) column_names->push_back((*header)[c]);
        }
    }
    return LabeledDataset(FeatureMatrix(n, d, std::move(cells)), std::move(labels),
                          std::move(column_names), std::move(label_name), label_col);
}

LabeledDataset read_csv(const std::filesystem::path& path, const LabelColumn& label,
                        const CsvOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str(), label, options);
}

std::string format_number(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc()) throw Error("number formatting failed");
    return std::string(buf.data(), ptr);
}

void write_csv(std::ostream& out, const LabeledDataset& dataset, const CsvOptions& options) {
    options.validate();
    const auto& x = dataset.features;
    const std::size_t d = x.cols();
    const char delim = options.delimiter;
    const std::size_t label_pos = dataset.label_position;

    if (options.has_header) {
        for (std::size_t c = 0, k = 0; c <= d; ++c) {
            if (c > 0) out << delim;
            if (c == label_pos) {
                write_field(out, dataset.label_name.value_or("label"), delim);
            } else {
                write_field(out, dataset.column_names ? (*dataset.column_names)[k] : "x" + std::to_string(k),
                            delim);
                ++k;
            }
        }
        out << '\n';
    }
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t c = 0, k = 0; c <= d; ++c) {
            if (c > 0) out << delim;
            if (c == label_pos) {
                write_field(out, dataset.labels[i].text(), delim);
            } else {
                const double v = x.at(i, k++);
                out << (is_missing(v) ? options.missing_token_out : format_number(v));
            }
        }
        out << '\n';
    }
}

void write_csv(const LabeledDataset& dataset, const std::filesystem::path& path,
               const CsvOptions& options) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    write_csv(out, dataset, options);
    out.flush();
    if (!out) throw Error("failed writing " + path.string());
}

void write_csv(const ResampleResult& result, const std::filesystem::path& path,
               const CsvOptions& options) {
    write_csv(result.dataset, path, options);
}

}  // namespace nanresample
