#pragma once

#include <cstdint>
#include <stdexcept>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace qpest::cli {

// Batch experiment runners behind the command line front end. Each command
// validates its spec fully, computes, and emits one structured table (CSV or
// JSON). Identical spec + seed means byte-identical output, independent of
// the worker count.

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "0.1.0";

enum class OutputFormat { csv, json };

struct ExperimentSpec {
    // protocol knobs
    int digits = 8;
    int digit_min = 1;
    int digit_max = 16;
    std::vector<double> error_rates;     // sweep-error curves; empty = default set
    double error_p = 1e-2;
    std::string ec = "none";             // none | s1 | s1-half | s2
    std::string estimator = "auto";      // auto | posterior | folded
    long runs = 10000;
    std::uint64_t seed = 1;
    int grid = 4096;
    int batches = 20;
    int threads = 0;

    // physical scales (SI units)
    std::string preset;                  // quantum-dot preset name, optional
    double tau_m = 1e-6;                 // s
    double delta0_inv = 10e-9;           // 1/delta0, s
    double safety_f = 1.0;
    double t_c = 1e-3;                   // s
    double est_rel = 0.025;              // Delta A_est / delta0 for decorrelate

    // command-specific
    std::string ideal_digits = "10110010";  // binary eigenvalue for `ideal`
    bool strict = false;                    // decorrelate: fail on regime violation

    // qd-params preset overrides; negative = keep the preset's value
    double qd_hyperfine_inv_ns = -1.0;
    long qd_nuclei = -1;
    double qd_polarization = -1.0;
    double qd_larmor_inv_ns = -1.0;

    // output
    std::string out_path;                // empty = stdout
    OutputFormat format = OutputFormat::csv;

    double delta0() const { return 1.0 / delta0_inv; }
};

using Cell = std::variant<long long, double, std::string>;

struct Table {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// 12 significant digits, locale-independent
std::string format_number(double value);

std::string render_csv(const Table& table);
std::string render_json(const Table& table);

// Writes to spec.out_path or stdout; throws IoError with the path on failure.
void emit(const Table& table, const ExperimentSpec& spec);

Table cmd_ideal(const ExperimentSpec& spec);
Table cmd_simulate(const ExperimentSpec& spec);
Table cmd_sweep_error(const ExperimentSpec& spec);
Table cmd_ec_compare(const ExperimentSpec& spec);
Table cmd_compare_ramsey(const ExperimentSpec& spec);
Table cmd_decorrelate(const ExperimentSpec& spec);
Table cmd_qd_params(const ExperimentSpec& spec);

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpest::cli
