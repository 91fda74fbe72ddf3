#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "finsum/cli.hpp"
#include "finsum/rational.hpp"
#include "finsum/y_numbers.hpp"

using namespace finsum;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "finsum");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliResult r;
    r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

}  // namespace

// Documented examples

TEST(Cli, YAtMinusOne) {
    const CliResult r = run_cli({"y", "--n", "1", "--lambda", "-1", "--method", "direct"});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_EQ(trimmed(r.out), "1/2");
}

TEST(Cli, AllMethodsPrintTheSameValue) {
    for (const char* method : {"direct", "alg1", "recurrence", "genfun"}) {
        const CliResult r = run_cli({"y", "--n", "3", "--lambda", "1/2", "--method", method});
        EXPECT_EQ(r.code, cli::ok) << method;
        EXPECT_EQ(trimmed(r.out), "-56/3") << method;
    }
}

TEST(Cli, SymbolicY) {
    const CliResult r = run_cli({"y", "--n", "2", "--method", "symbolic"});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_EQ(trimmed(r.out), "(11*L^2 - 7*L + 2)/(6*L^3*(L-1)^3)");
}

TEST(Cli, Table) {
    const CliResult r = run_cli({"table", "--max", "4"});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_NE(r.out.find(y_table_row(4)), std::string::npos);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST(Cli, Oeis) {
    EXPECT_EQ(trimmed(run_cli({"oeis", "--terms", "6"}).out), "1 3 11 25 137 147");
    const auto doc = nlohmann::json::parse(run_cli({"oeis", "--terms", "3", "--format", "json"}).out);
    EXPECT_EQ(doc["sequence"], "A025529");
    EXPECT_EQ(doc["terms"], nlohmann::json::array({"1", "3", "11"}));
}

TEST(Cli, SeriesPlain) {
    const CliResult r = run_cli({"series", "--which", "G", "--order", "3", "--lambda", "2"});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_EQ(r.out, "0 1/2\n1 5/8\n2 2/3\n3 131/192\n");
}

TEST(Cli, VolkenbornJsonRows) {
    const CliResult r = run_cli({"volkenborn", "--p", "3", "--max-level", "3", "--integrand", "power", "--index", "1"});
    EXPECT_EQ(r.code, cli::ok);
    std::istringstream lines(r.out);
    std::string line;
    long N = 0;
    while (std::getline(lines, line)) {
        const auto row = nlohmann::json::parse(line);
        EXPECT_EQ(row["N"], ++N);
        EXPECT_EQ(row["limit"], "-1/2");
    }
    EXPECT_EQ(N, 3);
}

// Formats

TEST(Cli, CsvQuotesRationals) {
    const CliResult r = run_cli({"y", "--n", "3", "--lambda", "1/2", "--format", "csv"});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_NE(r.out.find("3,\"1/2\",direct,\"-56/3\""), std::string::npos);
}

TEST(Cli, PrintedRationalsReparse) {
    for (const char* lambda : {"2", "-7/4", "5/3", "1/2"}) {
        for (const char* n : {"0", "5", "17"}) {
            const CliResult r = run_cli({"y", "--n", n, "--lambda", lambda});
            ASSERT_EQ(r.code, cli::ok);
            EXPECT_EQ(Rational::parse(trimmed(r.out)), y_direct(std::stol(n), Rational::parse(lambda)));
        }
    }
}

TEST(Cli, OutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "finsum_cli_output_test.txt";
    const CliResult r = run_cli({"oeis", "--terms", "4", "--output", path.string()});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(trimmed(contents), "1 3 11 25");
    std::filesystem::remove(path);
}

// Exit codes

TEST(Cli, UsageErrorsExitTwo) {
    const std::vector<std::vector<std::string>> bad{
        {"y", "--n", "1", "--lambda", "1"},
        {"y", "--n", "1", "--lambda", "0"},
        {"y", "--n", "1", "--lambda", "1/0"},
        {"y", "--n", "1", "--lambda", "abc"},
        {"y", "--lambda", "2"},
        {"y", "--n", "2", "--method", "recurrence"},
        {"bogus"},
        {},
        {"verify", "--id", "no-such-identity"},
        {"verify", "--family", "no-such-family"},
        {"volkenborn", "--p", "4", "--max-level", "2", "--integrand", "power", "--index", "1"},
        {"volkenborn", "--p", "2", "--max-level", "11", "--integrand", "power", "--index", "1"},
        {"series", "--which", "h", "--order", "3"},
        {"oeis", "--terms", "0"},
    };
    for (const auto& args : bad) {
        const CliResult r = run_cli(args);
        std::string joined;
        for (const auto& a : args) joined += a + " ";
        EXPECT_EQ(r.code, cli::usage_error) << joined;
        EXPECT_FALSE(r.err.empty()) << joined;
    }
}

TEST(Cli, HelpExitsZero) {
    EXPECT_EQ(run_cli({"--help"}).code, cli::ok);
    EXPECT_EQ(run_cli({"y", "--help"}).code, cli::ok);
}

TEST(Cli, VerifyExitCodeMatchesReport) {
    const CliResult r = run_cli({"verify", "--family", "section6", "--format", "json"});
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["failed"], 0);
    EXPECT_EQ(r.code, cli::ok);
    const CliResult one = run_cli({"verify", "--id", "zetaE-n0", "--format", "json"});
    const auto single = nlohmann::json::parse(one.out);
    EXPECT_EQ(single["total"], 1);
    EXPECT_EQ(one.code, single["failed"] == 0 ? cli::ok : cli::unexpected_failure);
}

TEST(Cli, VerifyCsvHeader) {
    const CliResult r = run_cli({"verify", "--id", "rec-1aGa", "--format", "csv"});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "id,family,status,max_n,swept,passed");
}
