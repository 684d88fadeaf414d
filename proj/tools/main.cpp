#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "experiments.hpp"
#include "qpest/errors.hpp"

// Exit codes: 0 success, 2 validation error, 3 I/O error, 4 regime violation
// (decorrelate --strict).

namespace {

using qpest::cli::ExperimentSpec;
using qpest::cli::OutputFormat;
using qpest::cli::Table;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitRegime = 4;

}  // namespace

int main(int argc, char** argv) {
    ExperimentSpec spec;
    std::string command;

    CLI::App app{"qpest - adaptive digit-ladder field estimation experiments"};
    app.require_subcommand(1);
    app.fallthrough(true);
    app.set_config("--config", "", "experiment spec file (key = value); flags override");
    app.footer("Times are seconds, rates are per-step probabilities. Identical\n"
               "spec + seed produces byte-identical output for any --threads.");

    app.add_option("--digits", spec.digits, "digit count M for single-config commands")
        ->check(CLI::Range(1, 48));
    app.add_option("--digit-min", spec.digit_min, "sweep lower M")->check(CLI::Range(1, 48));
    app.add_option("--digit-max", spec.digit_max, "sweep upper M")->check(CLI::Range(1, 48));
    app.add_option("--error-p", spec.error_p, "per-repetition flip probability p");
    app.add_option("--error-rates", spec.error_rates,
                   "sweep-error curve rates (default 0,1e-4,1e-2,1e-1)")
        ->delimiter(',');
    app.add_option("--ec", spec.ec, "error correction: none|s1|s1-half|s2")
        ->check(CLI::IsMember({"none", "s1", "s1-half", "s2"}));
    app.add_option("--estimator", spec.estimator, "auto|posterior|folded")
        ->check(CLI::IsMember({"auto", "posterior", "folded"}));
    app.add_option("--runs", spec.runs, "Monte Carlo runs per point");
    app.add_option("--seed", spec.seed, "base random seed");
    app.add_option("--grid", spec.grid, "prior grid size");
    app.add_option("--batches", spec.batches, "Monte Carlo batch count (fixes the stream split)");
    app.add_option("--threads", spec.threads, "worker threads (0 = hardware)");
    app.add_option("--preset", spec.preset, "quantum-dot preset (GaAs-large, GaAs-small)");
    app.add_option("--tau-m", spec.tau_m, "single-measurement time, s");
    app.add_option("--delta0-inv", spec.delta0_inv, "1/delta0, s");
    app.add_option("--safety-f", spec.safety_f, "safety factor f");
    app.add_option("--tc", spec.t_c, "bath correlation time, s");
    app.add_option("--est-rel", spec.est_rel, "decorrelate: Delta A_est / delta0");
    app.add_option("--s", spec.ideal_digits, "ideal: eigenvalue binary digits, e.g. 0.101");
    app.add_flag("--strict", spec.strict, "decorrelate: fail (exit 4) outside the expansion regime");
    app.add_option("--hyperfine", spec.qd_hyperfine_inv_ns, "qd-params: override A, 1/ns");
    app.add_option("--nuclei", spec.qd_nuclei, "qd-params: override N");
    app.add_option("--polarization", spec.qd_polarization, "qd-params: override P in [0,1]");
    app.add_option("--larmor", spec.qd_larmor_inv_ns, "qd-params: override epsilon_z, 1/ns");
    app.add_option("--out", spec.out_path, "output path (default stdout)");
    std::string format = "csv";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));

    const std::map<std::string, std::function<Table(const ExperimentSpec&)>> commands = {
        {"ideal", qpest::cli::cmd_ideal},
        {"simulate", qpest::cli::cmd_simulate},
        {"sweep-error", qpest::cli::cmd_sweep_error},
        {"ec-compare", qpest::cli::cmd_ec_compare},
        {"compare-ramsey", qpest::cli::cmd_compare_ramsey},
        {"decorrelate", qpest::cli::cmd_decorrelate},
        {"qd-params", qpest::cli::cmd_qd_params},
    };
    const std::map<std::string, std::string> descriptions = {
        {"ideal", "noise-free ladder on an exactly representable eigenvalue"},
        {"simulate", "Monte Carlo accuracy of one protocol configuration"},
        {"sweep-error", "accuracy curves over M for several error rates"},
        {"ec-compare", "error-correction strategies at a fixed error rate"},
        {"compare-ramsey", "ladder vs fixed-time baseline time budgets"},
        {"decorrelate", "bath-drift variance budget and rotation fidelity"},
        {"qd-params", "quantum-dot presets and derived parameters"},
    };
    for (const auto& [name, runner] : commands) {
        auto* sub = app.add_subcommand(name, descriptions.at(name));
        sub->callback([&, name = name] { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    spec.format = (format == "json") ? OutputFormat::json : OutputFormat::csv;

    try {
        const Table table = commands.at(command)(spec);
        qpest::cli::emit(table, spec);
    } catch (const qpest::cli::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qpest::RegimeViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
