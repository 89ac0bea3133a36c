#include "nanresample/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include <CLI11.hpp>

#include "nanresample/csv.hpp"
#include "nanresample/error.hpp"
#include "nanresample/report.hpp"
#include "nanresample/resample.hpp"

namespace nanresample {

namespace {

struct CsvArgs {
    std::string input;
    std::string label = "-1";
    std::string delimiter = ",";
    bool no_header = false;
    std::vector<std::string> missing_in;
    std::string missing_out;

    CsvOptions options() const {
        if (delimiter.size() != 1) throw UsageError("delimiter '" + delimiter + "' must be one character");
        CsvOptions o;
        o.delimiter = delimiter.front();
        o.has_header = !no_header;
        if (!missing_in.empty()) o.missing_tokens_in = missing_in;
        o.missing_token_out = missing_out;
        return o;
    }
};

void add_csv_options(CLI::App& cmd, CsvArgs& args) {
    cmd.add_option("--input", args.input, "Input CSV file")->required();
    cmd.add_option("--label", args.label, "Label column name or index (negative counts from the end)")
        ->capture_default_str();
    cmd.add_option("--delimiter", args.delimiter, "Field delimiter")->capture_default_str();
    cmd.add_flag("--no-header", args.no_header, "Input has no header row");
    cmd.add_option("--missing-in", args.missing_in,
                   "Tokens read as missing (default: empty, NaN, nan, NA)");
}

struct ResampleArgs {
    CsvArgs csv;
    std::string output;
    std::string method = "smote";
    std::string strategy = "auto";
    std::string nan_strategy = "preserve";
    std::size_t k = 5;
    double shrinkage = 1.0;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    std::size_t batch_size = 64;
};

int run_resample(const ResampleArgs& args, std::ostream& out, std::ostream& err) {
    // Parse every enumerated value before touching the filesystem so usage
    // errors win over data errors.
    SynthesisConfig config;
    config.method = parse_method(args.method);
    config.strategy = parse_sampling_spec(args.strategy);
    config.nan_strategy = parse_nan_strategy(args.nan_strategy);
    config.k = args.k;
    config.shrinkage = args.shrinkage;
    config.seed = args.seed;
    config.jobs = args.jobs;
    config.batch_size = args.batch_size;
    const auto options = args.csv.options();

    const auto dataset = read_csv(args.csv.input, parse_label_column(args.csv.label), options);
    const auto result = resample(dataset, config);
    for (const auto& w : result.warnings) err << "warning: " << w << '\n';
    write_csv(result, args.output, options);

    const auto counts = class_counts(partition_by_class(result.dataset));
    out << "wrote " << result.dataset.features.rows() << " rows (" << result.synthetic_rows()
        << " synthetic) to " << args.output << "\nclasses:";
    for (const auto& [label, n] : counts) out << ' ' << label.text() << '=' << n;
    out << '\n';
    return kExitOk;
}

int run_report(const CsvArgs& args, bool json, std::ostream& out) {
    const auto dataset = read_csv(args.input, parse_label_column(args.label), args.options());
    const auto report = make_report(dataset);
    if (json) {
        out << to_json(report).dump() << '\n';
    } else {
        out << format_report(report);
    }
    return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"NaN-aware synthetic oversampling for imbalanced tabular data", "nanresample"};
    app.require_subcommand(1);

    ResampleArgs rs;
    auto* resample_cmd = app.add_subcommand("resample", "Oversample minority classes of a CSV file");
    add_csv_options(*resample_cmd, rs.csv);
    resample_cmd->add_option("--output", rs.output, "Output CSV file")->required();
    resample_cmd->add_option("--method", rs.method, "smote | adasyn | rose")->capture_default_str();
    resample_cmd
        ->add_option("--strategy", rs.strategy,
                     "auto | minority | not-majority | <ratio> | <class=target,...>")
        ->capture_default_str();
    resample_cmd->add_option("--nan-strategy", rs.nan_strategy, "preserve | interpolate | random")
        ->capture_default_str();
    resample_cmd->add_option("--k", rs.k, "Neighbour count")->check(CLI::PositiveNumber)->capture_default_str();
    resample_cmd->add_option("--shrinkage", rs.shrinkage, "ROSE bandwidth multiplier")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    resample_cmd->add_option("--seed", rs.seed, "Random seed")->capture_default_str();
    resample_cmd->add_option("--jobs", rs.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    resample_cmd->add_option("--batch-size", rs.batch_size, "Synthetic rows per batch")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    resample_cmd->add_option("--missing-out", rs.csv.missing_out, "Token written for missing cells");

    CsvArgs report_args;
    bool json = false;
    auto* report_cmd = app.add_subcommand("report", "Summarise class balance and missingness");
    add_csv_options(*report_cmd, report_args);
    report_cmd->add_flag("--json", json, "Emit a single JSON object");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsageError;
    }

    try {
        if (resample_cmd->parsed()) return run_resample(rs, out, err);
        return run_report(report_args, json, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    }
}

}  // namespace nanresample
