#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "../support/fixtures.hpp"
#include "nanresample/cli.hpp"
#include "nanresample/csv.hpp"

using namespace nanresample;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("nanresample_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string fixture_csv(const TempDir& dir) {
    const auto ds = testing::make_fixture(
        {.class_sizes = {{0, 100}, {1, 20}}, .features = 10, .missing_rate = 0.2, .seed = 2024});
    const auto path = dir / "in.csv";
    write_csv(ds, path);
    return path;
}

}  // namespace

TEST_CASE("resample writes the balanced file") {
    TempDir dir;
    const auto in = fixture_csv(dir);
    const auto r = run({"resample", "--input", in, "--output", dir / "out.csv", "--method", "smote", "--strategy",
                        "auto", "--seed", "42"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("wrote 200 rows (80 synthetic)") == 0);
    const auto back = read_csv(dir / "out.csv", std::string("label"));
    CHECK(back.features.rows() == 200);
    CHECK(back.features.cols() == 10);
}

TEST_CASE("ratio strategy through the CLI") {
    TempDir dir;
    const auto in = fixture_csv(dir);
    const auto r = run({"resample", "--input", in, "--output", dir / "out.csv", "--strategy", "0.5"});
    REQUIRE(r.code == kExitOk);
    const auto counts = class_counts(partition_by_class(read_csv(dir / "out.csv", -1L)));
    CHECK(counts.at(ClassLabel(0)) == 100);
    CHECK(counts.at(ClassLabel(1)) == 50);
}

TEST_CASE("output bytes do not depend on jobs") {
    TempDir dir;
    const auto in = fixture_csv(dir);
    for (const char* method : {"smote", "adasyn", "rose"}) {
        std::string reference;
        for (const char* jobs : {"1", "2", "4"}) {
            const auto out = dir / (std::string(method) + jobs + ".csv");
            REQUIRE(run({"resample", "--input", in, "--output", out, "--method", method, "--nan-strategy", "random",
                         "--seed", "7", "--jobs", jobs, "--batch-size", "5"})
                        .code == kExitOk);
            if (reference.empty()) {
                reference = slurp(out);
            } else {
                CHECK(slurp(out) == reference);
            }
        }
    }
}

TEST_CASE("usage errors exit 2 and name the token") {
    TempDir dir;
    const auto in = fixture_csv(dir);
    const auto out = dir / "out.csv";

    auto r = run({"resample", "--input", in, "--output", out, "--bogus"});
    CHECK(r.code == kExitUsageError);
    CHECK(r.err.find("--bogus") != std::string::npos);

    r = run({"resample", "--input", in, "--output", out, "--method", "tomek"});
    CHECK(r.code == kExitUsageError);
    CHECK(r.err.find("tomek") != std::string::npos);

    r = run({"resample", "--input", in, "--output", out, "--strategy", "most"});
    CHECK(r.code == kExitUsageError);
    CHECK(r.err.find("most") != std::string::npos);

    r = run({"resample", "--input", in, "--output", out, "--nan-strategy", "drop"});
    CHECK(r.code == kExitUsageError);
    CHECK(r.err.find("drop") != std::string::npos);

    // Usage errors are reported before the input is opened.
    r = run({"resample", "--input", dir / "absent.csv", "--output", out, "--method", "tomek"});
    CHECK(r.code == kExitUsageError);

    CHECK(run({}).code == kExitUsageError);
    CHECK(run({"frobnicate"}).code == kExitUsageError);
    CHECK(run({"resample", "--input", in, "--output", out, "--k", "0"}).code == kExitUsageError);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("data errors exit 1") {
    TempDir dir;
    const auto out = dir / "out.csv";
    CHECK(run({"resample", "--input", dir / "absent.csv", "--output", out}).code == kExitDataError);

    {
        std::ofstream f(dir / "bad.csv");
        f << "a,y\n1,0\nxyz,1\n";
    }
    const auto r = run({"report", "--input", dir / "bad.csv"});
    CHECK(r.code == kExitDataError);
    CHECK(r.err.find("line 3, column 1") != std::string::npos);

    {
        std::ofstream f(dir / "one.csv");
        f << "a,y\n1,0\n2,0\n";
    }
    CHECK(run({"resample", "--input", dir / "one.csv", "--output", out}).code == kExitDataError);
}

TEST_CASE("report subcommand") {
    TempDir dir;
    {
        std::ofstream f(dir / "bal.csv");
        f << "a,b,y\n1,2,0\n3,4,1\n";
    }
    auto r = run({"report", "--input", dir / "bal.csv", "--label", "y", "--json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["imbalance_ratio"] == 1.0);
    CHECK(j["nan_rate"] == 0.0);
    CHECK(j["classes"]["0"] == 1);

    r = run({"report", "--input", dir / "bal.csv"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("imbalance ratio: 1.0000") != std::string::npos);
}

TEST_CASE("missing-value tokens on the command line") {
    TempDir dir;
    {
        std::ofstream f(dir / "q.csv");
        f << "a,b,y\n1,?,0\n2,3,0\n4,?,1\n";
    }
    const auto out = dir / "out.csv";
    REQUIRE(run({"resample", "--input", dir / "q.csv", "--output", out, "--missing-in", "?", "--missing-out", "NA",
                 "--method", "rose", "--shrinkage", "0"})
                .code == kExitOk);
    CHECK(slurp(out).substr(0, 30) == "a,b,y\n1,NA,0\n2,3,0\n4,NA,1\n4,NA");
}
