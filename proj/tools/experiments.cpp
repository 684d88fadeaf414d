#include "experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "qpest/qpest.hpp"

namespace qpest::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> default_error_rates() { return {0.0, 1e-4, 1e-2, 1e-1}; }

EstimatorMode parse_estimator(const std::string& name, bool sweep) {
    if (name == "posterior") return EstimatorMode::posterior_mean;
    if (name == "folded") return EstimatorMode::folded;
    if (name == "auto")
        // sweeps hold one estimator across the whole curve; the automatic
        // per-point switch would put a seam mid-curve
        return sweep ? EstimatorMode::folded : EstimatorMode::automatic;
    throw ArgumentError("estimator must be auto|posterior|folded (got '" + name + "')");
}

ScaleMap scale_for(const ExperimentSpec& spec) {
    double delta0 = spec.delta0();
    if (!spec.preset.empty()) {
        const auto preset = QDPreset::by_name(spec.preset);
        if (!preset)
            throw ArgumentError("unknown preset '" + spec.preset + "'");
        const auto derived = qd_derived_parameters(*preset);
        if (!(derived.delta0 > 0.0))
            throw ArgumentError("preset '" + spec.preset + "' has zero field spread");
        delta0 = derived.delta0;
    }
    return ScaleMap::from_prior(delta0, spec.safety_f);
}

double bath_correlation_time(const ExperimentSpec& spec) {
    if (!spec.preset.empty()) {
        const auto preset = QDPreset::by_name(spec.preset);
        if (!preset)
            throw ArgumentError("unknown preset '" + spec.preset + "'");
        return qd_derived_parameters(*preset).correlation_time;
    }
    return spec.t_c;
}

ProtocolConfig protocol_for(const ExperimentSpec& spec, int digits, double error_p,
                            const std::string& ec_name) {
    ProtocolConfig config;
    config.digit_count = digits;
    config.scale = scale_for(spec);
    config.tau_m = spec.tau_m;
    config.error_p = error_p;
    config.ec = ECStrategy::from_name(ec_name);
    config.seed = spec.seed;
    config.validate();
    return config;
}

void validate_common(const ExperimentSpec& spec) {
    if (spec.runs < 1) throw ArgumentError("runs must be >= 1");
    if (spec.grid < 2) throw ArgumentError("grid must be >= 2");
    if (spec.batches < 1) throw ArgumentError("batches must be >= 1");
    if (!(spec.delta0_inv > 0.0)) throw ArgumentError("delta0-inv must be > 0");
    if (!(spec.safety_f > 0.0)) throw ArgumentError("safety factor must be > 0");
    if (spec.tau_m < 0.0) throw ArgumentError("tau-m must be >= 0");
}

void validate_digit_range(const ExperimentSpec& spec) {
    if (spec.digit_min < 1 || spec.digit_max > 48 || spec.digit_min > spec.digit_max)
        throw ArgumentError("digit range must satisfy 1 <= digit-min <= digit-max <= 48");
}

std::vector<std::pair<std::string, std::string>> base_metadata(const ExperimentSpec& spec,
                                                               const std::string& command) {
    return {
        {"tool-version", kToolVersion},
        {"schema-version", kSchemaVersion},
        {"command", command},
        {"seed", std::to_string(spec.seed)},
        {"runs", std::to_string(spec.runs)},
        {"grid", std::to_string(spec.grid)},
        {"tau-m-s", format_number(spec.tau_m)},
        {"delta0-inv-s", format_number(spec.delta0_inv)},
        {"safety-f", format_number(spec.safety_f)},
    };
}

const std::vector<std::string> kRunColumns = {
    "m",       "error_p",        "ec",          "estimator",   "runs",
    "rms_scaled", "log10_error_over_delta0", "log10_std_error", "t_int_s", "t_total_s",
    "measurements"};

std::vector<Cell> run_report_row(const RunReport& report, const ScaleMap& scale) {
    std::vector<Cell> row;
    row.emplace_back(static_cast<long long>(report.digit_count));
    row.emplace_back(report.error_p);
    row.emplace_back(report.ec_name);
    row.emplace_back(to_string(report.estimator_used));
    row.emplace_back(static_cast<long long>(report.runs));
    row.emplace_back(report.rms_error_scaled);
    if (report.rms_error_scaled > 0.0) {
        const double rel = report.rms_error_physical / scale.delta0;
        row.emplace_back(std::log10(rel));
        row.emplace_back(report.rms_std_error_scaled / (report.rms_error_scaled * std::log(10.0)));
    } else {
        row.emplace_back(std::string{});
        row.emplace_back(std::string{});
    }
    row.emplace_back(report.time_per_run.interaction);
    row.emplace_back(report.time_per_run.total);
    row.emplace_back(static_cast<long long>(report.time_per_run.measurements));
    return row;
}

MonteCarloOptions mc_options(const ExperimentSpec& spec, bool sweep) {
    MonteCarloOptions options;
    options.runs = spec.runs;
    options.batches = spec.batches;
    options.threads = spec.threads;
    options.estimator = parse_estimator(spec.estimator, sweep);
    return options;
}

}  // namespace

std::string format_number(double value) {
    char buffer[40];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                      std::chars_format::general, 12);
    return std::string(buffer, result.ptr);
}

namespace {

std::string cell_text(const Cell& cell) {
    if (std::holds_alternative<long long>(cell)) return std::to_string(std::get<long long>(cell));
    if (std::holds_alternative<double>(cell)) return format_number(std::get<double>(cell));
    return std::get<std::string>(cell);
}

}  // namespace

std::string render_csv(const Table& table) {
    std::ostringstream out;
    for (const auto& [key, value] : table.metadata) out << "# " << key << " = " << value << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << table.columns[c] << (c + 1 < table.columns.size() ? "," : "\n");
    for (const auto& row : table.rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            out << cell_text(row[c]) << (c + 1 < row.size() ? "," : "\n");
    return out.str();
}

std::string render_json(const Table& table) {
    nlohmann::ordered_json doc;
    for (const auto& [key, value] : table.metadata) doc["metadata"][key] = value;
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        auto cells = nlohmann::ordered_json::array();
        for (const auto& cell : row) {
            if (std::holds_alternative<long long>(cell))
                cells.push_back(std::get<long long>(cell));
            else if (std::holds_alternative<double>(cell))
                // round through the 12-digit text form so CSV and JSON carry
                // identical numbers
                cells.push_back(std::strtod(format_number(std::get<double>(cell)).c_str(), nullptr));
            else
                cells.push_back(std::get<std::string>(cell));
        }
        rows.push_back(std::move(cells));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void emit(const Table& table, const ExperimentSpec& spec) {
    const std::string text =
        spec.format == OutputFormat::csv ? render_csv(table) : render_json(table);
    if (spec.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(spec.out_path, std::ios::binary);
    if (!out) throw IoError("cannot open output file for writing: " + spec.out_path);
    out << text;
    out.flush();
    if (!out) throw IoError("failed while writing output file: " + spec.out_path);
}

Table cmd_ideal(const ExperimentSpec& spec) {
    validate_common(spec);
    const DigitString eigenvalue = DigitString::parse(spec.ideal_digits);
    const auto config = protocol_for(spec, eigenvalue.digit_count(), 0.0, "none");
    const Transcript transcript = run_ideal(eigenvalue, config);

    Table table;
    table.metadata = base_metadata(spec, "ideal");
    table.metadata.emplace_back("eigenvalue", eigenvalue.to_string());
    table.metadata.emplace_back("decoded", transcript.decoded.to_string());
    table.metadata.emplace_back("exact-recovery", transcript.decoded == eigenvalue ? "true" : "false");
    table.columns = {"step", "significance", "t_j_s", "basis_angle_rad", "decoded_bit"};
    for (const auto& record : transcript.steps) {
        table.rows.push_back({static_cast<long long>(record.step),
                              static_cast<long long>(config.digit_count + 1 - record.step),
                              record.interaction_time, record.basis_angle,
                              static_cast<long long>(record.decoded_bit)});
    }
    return table;
}

Table cmd_simulate(const ExperimentSpec& spec) {
    validate_common(spec);
    if (!(spec.error_p >= 0.0 && spec.error_p <= 1.0))
        throw ArgumentError("error-p must lie in [0, 1]");
    const auto config = protocol_for(spec, spec.digits, spec.error_p, spec.ec);
    const auto prior = PriorDistribution::uniform(spec.grid);
    const auto report = monte_carlo_uncertainty(prior, config, mc_options(spec, false));

    Table table;
    table.metadata = base_metadata(spec, "simulate");
    table.metadata.emplace_back("ec", spec.ec);
    table.columns = kRunColumns;
    table.rows.push_back(run_report_row(report, config.scale));
    return table;
}

Table cmd_sweep_error(const ExperimentSpec& spec) {
    validate_common(spec);
    validate_digit_range(spec);
    const auto rates = spec.error_rates.empty() ? default_error_rates() : spec.error_rates;
    for (double p : rates)
        if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("error rates must lie in [0, 1]");

    const auto prior = PriorDistribution::uniform(spec.grid);
    Table table;
    table.metadata = base_metadata(spec, "sweep-error");
    table.metadata.emplace_back("ec", spec.ec);
    table.columns = kRunColumns;
    for (double p : rates) {
        for (int m = spec.digit_min; m <= spec.digit_max; ++m) {
            const auto config = protocol_for(spec, m, p, spec.ec);
            const auto report = monte_carlo_uncertainty(prior, config, mc_options(spec, true));
            table.rows.push_back(run_report_row(report, config.scale));
        }
    }
    return table;
}

Table cmd_ec_compare(const ExperimentSpec& spec) {
    validate_common(spec);
    validate_digit_range(spec);
    if (!(spec.error_p >= 0.0 && spec.error_p <= 1.0))
        throw ArgumentError("error-p must lie in [0, 1]");

    const auto prior = PriorDistribution::uniform(spec.grid);
    Table table;
    table.metadata = base_metadata(spec, "ec-compare");
    table.metadata.emplace_back("error-p", format_number(spec.error_p));
    table.columns = kRunColumns;
    // one curve per strategy, all driven by the same seeds so curve-to-curve
    // differences are not washed out by sampling noise
    for (const char* ec_name : {"none", "s1", "s1-half", "s2"}) {
        for (int m = spec.digit_min; m <= spec.digit_max; ++m) {
            const auto config = protocol_for(spec, m, spec.error_p, ec_name);
            const auto report = monte_carlo_uncertainty(prior, config, mc_options(spec, true));
            table.rows.push_back(run_report_row(report, config.scale));
        }
    }
    return table;
}

Table cmd_compare_ramsey(const ExperimentSpec& spec) {
    validate_common(spec);
    validate_digit_range(spec);
    Table table;
    table.metadata = base_metadata(spec, "compare-ramsey");
    table.columns = {"m",        "target_accuracy", "ladder_t_int_s",  "ladder_t_total_s",
                     "ladder_measurements", "ramsey_t_total_s", "ramsey_shots"};
    for (int m = spec.digit_min; m <= spec.digit_max; ++m) {
        const auto config = protocol_for(spec, m, 0.0, "none");
        const auto time = protocol_time(config);
        table.rows.push_back({static_cast<long long>(m),
                              std::pow(2.0, -0.5 * m),  // relative accuracy 2^{-M/2}
                              time.interaction, time.total,
                              static_cast<long long>(time.measurements),
                              ramsey_comparison_time(config),
                              static_cast<long long>(std::uint64_t{1} << m)});
    }
    return table;
}

Table cmd_decorrelate(const ExperimentSpec& spec) {
    validate_common(spec);
    if (!(spec.t_c > 0.0)) throw ArgumentError("tc must be > 0");
    if (!(spec.est_rel >= 0.0)) throw ArgumentError("est-rel must be >= 0");

    const auto scale = scale_for(spec);
    const double delta0 = scale.delta0;
    const double t_c = bath_correlation_time(spec);
    const auto process = BathProcess::gaussian(delta0, t_c);
    const auto config = protocol_for(spec, spec.digits, 0.0, spec.ec);
    const double window = protocol_time(config).total;  // T_M
    const double est_var = (spec.est_rel * delta0) * (spec.est_rel * delta0);

    const bool regime_violation = window > t_c / 10.0;
    if (regime_violation && spec.strict)
        throw RegimeViolationError("decorrelate: T_M = " + format_number(window) +
                                   " s exceeds t_c/10 = " + format_number(t_c / 10.0) + " s");

    Table table;
    table.metadata = base_metadata(spec, "decorrelate");
    table.metadata.emplace_back("t-c-s", format_number(t_c));
    table.metadata.emplace_back("t-m-s", format_number(window));
    table.metadata.emplace_back("est-rel", format_number(spec.est_rel));
    table.metadata.emplace_back("regime-warning", regime_violation ? "true" : "false");
    table.columns = {"section", "x", "expansion", "quadrature", "monte_carlo"};

    RandomStream rng(spec.seed);
    const long realizations = spec.runs;
    for (double lag_factor : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const double lag = lag_factor * window;
        std::vector<Cell> row{std::string("variance_vs_lag"), lag, std::string{}, 0.0, 0.0};
        if (!regime_violation && lag_factor == 1.0)
            row[2] = decorrelation_variance_expansion(process, window, est_var).total;
        row[3] = decorrelation_variance(process, window, est_var, lag).total;
        row[4] = decorrelation_variance_sampled(process, window, est_var, lag, realizations, rng);
        table.rows.push_back(std::move(row));
    }

    // fidelity of a controlled rotation by the listed angle, executed one
    // window after the record, with the rotation time set by the typical
    // record magnitude delta0/2
    for (double angle : {0.25 * kPi, 0.5 * kPi, kPi, 1.5 * kPi, 2.0 * kPi}) {
        const double rotation_time = angle / (0.5 * delta0);
        const double analytic = rotation_fidelity(process, window, est_var, window, rotation_time);
        const double sampled = rotation_fidelity_sampled(process, window, est_var, window,
                                                         rotation_time, realizations, rng);
        table.rows.push_back({std::string("fidelity_vs_angle"), angle, 1.0 + std::log(analytic),
                              analytic, sampled});
    }
    return table;
}

Table cmd_qd_params(const ExperimentSpec& spec) {
    validate_common(spec);
    std::vector<QDPreset> presets;
    if (spec.preset.empty()) {
        for (const auto& name : QDPreset::preset_names()) presets.push_back(*QDPreset::by_name(name));
    } else {
        const auto preset = QDPreset::by_name(spec.preset);
        if (!preset) throw ArgumentError("unknown preset '" + spec.preset + "'");
        presets.push_back(*preset);
    }
    for (auto& preset : presets) {
        if (spec.qd_hyperfine_inv_ns >= 0.0)
            preset.hyperfine_total = from_inverse_ns(spec.qd_hyperfine_inv_ns);
        if (spec.qd_nuclei >= 0) preset.nuclei = spec.qd_nuclei;
        if (spec.qd_polarization >= 0.0) preset.polarization = spec.qd_polarization;
        if (spec.qd_larmor_inv_ns >= 0.0) preset.larmor = from_inverse_ns(spec.qd_larmor_inv_ns);
        preset.validate();
    }

    Table table;
    table.metadata = base_metadata(spec, "qd-params");
    table.columns = {"preset",        "hyperfine_inv_ns", "nuclei",     "polarization",
                     "larmor_inv_ns", "delta0_rad_s",     "t2_star_s",  "t_c_s",
                     "m_opt"};
    for (const auto& preset : presets) {
        const auto derived = qd_derived_parameters(preset);
        std::vector<Cell> row;
        row.emplace_back(preset.name);
        row.emplace_back(to_inverse_ns(preset.hyperfine_total));
        row.emplace_back(static_cast<long long>(preset.nuclei));
        row.emplace_back(preset.polarization);
        row.emplace_back(to_inverse_ns(preset.larmor));
        row.emplace_back(derived.delta0);
        if (derived.t2_star)
            row.emplace_back(*derived.t2_star);
        else
            row.emplace_back(std::string("inf"));
        row.emplace_back(derived.correlation_time);
        if (derived.delta0 > 0.0)
            row.emplace_back(static_cast<long long>(
                optimal_digit_count(derived.delta0, spec.safety_f, derived.correlation_time)));
        else
            row.emplace_back(std::string{});
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace qpest::cli
