#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "experiments.hpp"
#include "gtest/gtest.h"
#include "qpest/errors.hpp"

using namespace qpest::cli;

#ifndef QPEST_CLI_PATH
#define QPEST_CLI_PATH "qpest"
#endif

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string command = std::string(QPEST_CLI_PATH) + " " + args + " 2>/dev/null";
    CommandResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

ExperimentSpec quick_spec() {
    ExperimentSpec spec;
    spec.runs = 200;
    spec.grid = 256;
    spec.digits = 4;
    spec.digit_min = 2;
    spec.digit_max = 4;
    return spec;
}

}  // namespace

TEST(Format, TwelveSignificantDigits) {
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_number(1e-6), "1e-06");
    EXPECT_EQ(format_number(264.042477193e-6), "0.000264042477193");
}

TEST(Schema, RunReportColumnsArePinned) {
    const auto table = cmd_simulate(quick_spec());
    const std::vector<std::string> expected = {
        "m",          "error_p",
        "ec",         "estimator",
        "runs",       "rms_scaled",
        "log10_error_over_delta0", "log10_std_error",
        "t_int_s",    "t_total_s",
        "measurements"};
    EXPECT_EQ(table.columns, expected);
    ASSERT_EQ(table.rows.size(), 1u);
    EXPECT_EQ(table.rows[0].size(), expected.size());
    bool found_version = false;
    for (const auto& [key, value] : table.metadata)
        if (key == "schema-version") {
            EXPECT_EQ(value, "1");
            found_version = true;
        }
    EXPECT_TRUE(found_version);
}

TEST(Schema, DecorrelateColumnsArePinned) {
    auto spec = quick_spec();
    spec.runs = 50;
    const auto table = cmd_decorrelate(spec);
    const std::vector<std::string> expected = {"section", "x", "expansion", "quadrature",
                                               "monte_carlo"};
    EXPECT_EQ(table.columns, expected);
    EXPECT_EQ(table.rows.size(), 10u);  // five lags + five angles
}

TEST(Schema, CsvGoldenHeader) {
    auto spec = quick_spec();
    spec.digit_min = spec.digit_max = 3;
    spec.error_rates = {0.0};
    spec.runs = 50;
    const auto csv = render_csv(cmd_sweep_error(spec));
    EXPECT_NE(csv.find("# schema-version = 1\n"), std::string::npos);
    EXPECT_NE(csv.find("# command = sweep-error\n"), std::string::npos);
    EXPECT_NE(csv.find("m,error_p,ec,estimator,runs,rms_scaled,log10_error_over_delta0,"
                       "log10_std_error,t_int_s,t_total_s,measurements\n"),
              std::string::npos);
}

TEST(Validation, FailsBeforeAnyOutput) {
    auto spec = quick_spec();
    spec.digit_min = 5;
    spec.digit_max = 3;
    spec.out_path = "/tmp/qpest_should_not_exist.csv";
    std::remove(spec.out_path.c_str());
    EXPECT_THROW(cmd_sweep_error(spec), qpest::ArgumentError);
    std::ifstream probe(spec.out_path);
    EXPECT_FALSE(probe.good());
}

TEST(Validation, RatesMustBeProbabilities) {
    auto spec = quick_spec();
    spec.error_rates = {0.0, 1.5};
    EXPECT_THROW(cmd_sweep_error(spec), qpest::ArgumentError);
    spec = quick_spec();
    spec.error_p = -0.1;
    EXPECT_THROW(cmd_simulate(spec), qpest::ArgumentError);
    spec = quick_spec();
    spec.preset = "not-a-dot";
    EXPECT_THROW(cmd_qd_params(spec), qpest::ArgumentError);
}

TEST(Cli, DeterministicAcrossThreadCounts) {
    const std::string base = "simulate --digits 8 --runs 1000 --seed 31 --grid 1024";
    auto a = run_cli(base + " --threads 1 --out /tmp/qpest_t1.csv");
    auto b = run_cli(base + " --threads 8 --out /tmp/qpest_t8.csv");
    ASSERT_EQ(a.exit_code, 0);
    ASSERT_EQ(b.exit_code, 0);
    EXPECT_EQ(slurp("/tmp/qpest_t1.csv"), slurp("/tmp/qpest_t8.csv"));
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
    const std::string base = "ec-compare --digit-min 2 --digit-max 3 --runs 300 --seed 5 "
                             "--grid 512 --format json";
    auto a = run_cli(base);
    auto b = run_cli(base);
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.output, b.output);
    EXPECT_NE(a.output.find("\"schema-version\": \"1\""), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("sweep-error --digit-min 9 --digit-max 2 --runs 10").exit_code, 2);
    EXPECT_EQ(run_cli("simulate --runs 10 --grid 64 --out /no-such-dir/out.csv").exit_code, 3);
    EXPECT_EQ(run_cli("decorrelate --tc 1e-5 --strict --runs 10").exit_code, 4);
    EXPECT_EQ(run_cli("simulate --ec bogus --runs 10").exit_code, 2);
    EXPECT_EQ(run_cli("qd-params").exit_code, 0);
}

TEST(Cli, ConfigFileWithFlagOverride) {
    std::ofstream conf("/tmp/qpest_spec.conf");
    conf << "digits=6\nruns=100\nseed=77\ngrid=256\n";
    conf.close();
    auto from_config = run_cli("simulate --config /tmp/qpest_spec.conf");
    ASSERT_EQ(from_config.exit_code, 0);
    EXPECT_NE(from_config.output.find("\n6,"), std::string::npos);
    auto overridden = run_cli("simulate --config /tmp/qpest_spec.conf --digits 3");
    ASSERT_EQ(overridden.exit_code, 0);
    EXPECT_NE(overridden.output.find("\n3,"), std::string::npos);
}

namespace {

double rms_of_row(const std::vector<Cell>& row) { return std::get<double>(row[5]); }

}  // namespace

TEST(Curves, SweepOrderingByErrorRate) {
    ExperimentSpec spec;
    spec.digit_min = spec.digit_max = 16;
    spec.runs = 20000;
    spec.seed = 11;
    const auto table = cmd_sweep_error(spec);  // default rates 0, 1e-4, 1e-2, 1e-1
    ASSERT_EQ(table.rows.size(), 4u);
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i)
        EXPECT_LT(rms_of_row(table.rows[i]), rms_of_row(table.rows[i + 1])) << i;
}

TEST(Curves, CleanRunBeatsHalvingBound) {
    ExperimentSpec spec;
    spec.digit_min = spec.digit_max = 8;
    spec.error_rates = {0.0};
    spec.runs = 4000;
    const auto table = cmd_sweep_error(spec);
    ASSERT_EQ(table.rows.size(), 1u);
    const double log10_error = std::get<double>(table.rows[0][6]);
    EXPECT_LE(log10_error, -0.5 * 8 * std::log10(2.0) + 0.1);
}

TEST(Curves, StrategiesCoincideWithoutErrors) {
    // every digit of a 14-bit grid eigenvalue is determined, so repeated
    // noise-free measurements decode identically for every strategy
    ExperimentSpec spec;
    spec.digits = 14;
    spec.digit_min = spec.digit_max = 14;
    spec.error_p = 0.0;
    spec.runs = 500;
    const auto table = cmd_ec_compare(spec);
    ASSERT_EQ(table.rows.size(), 4u);
    for (std::size_t i = 1; i < table.rows.size(); ++i)
        EXPECT_EQ(rms_of_row(table.rows[i]), rms_of_row(table.rows[0]));
}

TEST(Cli, IdealReportsExactRecovery) {
    auto result = run_cli("ideal --s 0.1101");
    ASSERT_EQ(result.exit_code, 0);
    EXPECT_NE(result.output.find("# exact-recovery = true"), std::string::npos);
    EXPECT_NE(result.output.find("# decoded = 0.1101"), std::string::npos);
}

TEST(Cli, QdParamsAcceptsOverrides) {
    // shrinking the dot from 1e6 to 1e4 nuclei shortens t_c by 1e3
    auto result = run_cli("qd-params --preset GaAs-large --nuclei 10000");
    ASSERT_EQ(result.exit_code, 0);
    EXPECT_NE(result.output.find(",1e-06,"), std::string::npos);  // t_c = 1 us
    EXPECT_EQ(run_cli("qd-params --polarization 1.5").exit_code, 2);
}
