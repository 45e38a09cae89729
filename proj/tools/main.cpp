// Command line front end: parameter sweeps, figure presets, coupling and
// mode-geometry queries, CSV/SVG output.

#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twoatom/analytic.hpp"
#include "twoatom/config_file.hpp"
#include "twoatom/coupling.hpp"
#include "twoatom/csv.hpp"
#include "twoatom/svg.hpp"

namespace {

using namespace twoatom;

constexpr double kPi = std::numbers::pi;

// One configurable parameter: CLI flag overrides config-file key overrides
// the built-in default.
struct CommonOptions {
    CLI::Option* opt_config = nullptr;
    std::string config_path;

    double gamma1 = 1.0, gamma2 = 1.0, delta = 0.0, separation = 0.25;
    double dipole_angle = kPi / 2;
    double rabi = 0.2, detuning_l = 0.0, theta_l = kPi / 2, phi_l = 0.0;
    double omega12 = 0.0, gamma12 = 0.0;
    std::string coupling = "independent";
    std::string engine = "master";
    int jobs = 1;

    std::vector<std::pair<std::string, CLI::Option*>> tracked;

    void add_to(CLI::App* cmd) {
        opt_config = cmd->add_option("--config", config_path,
                                     "flat key=value configuration file");
        auto track = [&](const std::string& key, CLI::Option* opt) {
            tracked.emplace_back(key, opt);
        };
        track("gamma1", cmd->add_option("--gamma1", gamma1,
                                        "damping rate of atom 1 [Γ0]"));
        track("gamma2", cmd->add_option("--gamma2", gamma2,
                                        "damping rate of atom 2 [Γ0]"));
        track("delta", cmd->add_option("--delta", delta,
                                       "atomic frequency difference [Γ0]"));
        track("separation",
              cmd->add_option("--separation", separation,
                              "interatomic distance [wavelengths]"));
        track("dipole_angle",
              cmd->add_option("--dipole-angle", dipole_angle,
                              "angle between dipoles and the axis [rad]"));
        track("rabi", cmd->add_option("--rabi", rabi, "Rabi frequency [Γ0]"));
        track("detuning_l", cmd->add_option("--detuning-l", detuning_l,
                                            "laser detuning ω0−ωL [Γ0]"));
        track("theta_l", cmd->add_option("--theta-l", theta_l,
                                         "laser propagation angle [rad]"));
        track("phi_l",
              cmd->add_option("--phi-l", phi_l, "laser initial phase [rad]"));
        track("coupling",
              cmd->add_option("--coupling", coupling,
                              "independent|interacting|custom")
                  ->check(CLI::IsMember(
                      {"independent", "interacting", "custom"})));
        track("omega12", cmd->add_option("--omega12", omega12,
                                         "custom dipole-dipole shift [Γ0]"));
        track("gamma12", cmd->add_option("--gamma12", gamma12,
                                         "custom cross damping [Γ0]"));
        track("engine", cmd->add_option("--engine", engine, "master|analytic")
                            ->check(CLI::IsMember({"master", "analytic"})));
        cmd->add_option("--jobs", jobs, "concurrent sweep workers")
            ->check(CLI::PositiveNumber);
    }

    // Applies config-file values underneath explicitly given CLI flags.
    void merge_config_file() {
        if (!opt_config || opt_config->count() == 0) return;
        const auto values = load_key_values(config_path);

        for (const auto& [key, value] : values) {
            bool known = false;
            for (const auto& [name, opt] : tracked) {
                if (name != key) continue;
                known = true;
                if (opt->count() == 0) {
                    // CLI11 parses/validates the raw string for us.
                    opt->add_result(value);
                    opt->run_callback();
                }
                break;
            }
            if (!known)
                throw std::runtime_error("unknown key in " + config_path +
                                         ": " + key);
        }
    }

    AtomPair pair() const {
        return {gamma1, gamma2, delta, separation, dipole_angle};
    }
    Drive drive() const { return {rabi, detuning_l, theta_l, phi_l}; }
    CouplingMode mode() const {
        if (coupling == "independent") return CouplingMode::independent();
        if (coupling == "interacting") return CouplingMode::interacting();
        return CouplingMode::custom(omega12, gamma12);
    }
    Engine engine_kind() const {
        return engine == "analytic" ? Engine::analytic : Engine::master;
    }
};

void emit(const SweepResult& result, const std::string& out_path,
          const std::string& svg_path, PlotStyle style) {
    if (out_path.empty())
        write_csv(result, std::cout);
    else
        write_csv(result, out_path);
    if (!svg_path.empty()) render_svg(result, style, svg_path);
}

void run_couplings(const CommonOptions& options) {
    const Configuration config =
        validate(options.pair(), options.drive(), options.mode());
    const CollectiveParams collective =
        resolve_coupling(config.pair, config.mode);
    const double cos_alpha_sq =
        0.5 * (1.0 + collective.cos2alpha);  // ½ + Δ/(2U)

    std::printf("omega12 = %s\n", format_double(collective.omega12).c_str());
    std::printf("gamma12 = %s\n", format_double(collective.gamma12).c_str());
    std::printf("u_split = %s\n", format_double(collective.u_split).c_str());
    std::printf("cos2alpha = %s\n",
                format_double(collective.cos2alpha).c_str());
    std::printf("sin2alpha = %s\n",
                format_double(collective.sin2alpha).c_str());
    std::printf("cos_alpha_sq = %s\n", format_double(cos_alpha_sq).c_str());
}

void run_modes(const CommonOptions& options) {
    const ModeSet modes = mode_angles(options.separation);
    auto print = [](const char* family, const std::vector<ModeSet::Mode>& set) {
        std::printf("%s:\n", family);
        for (const auto& mode : set)
            std::printf("  theta = %-20s theta/pi = %-20s n = %-3d sign = %+d\n",
                        format_double(mode.theta).c_str(),
                        format_double(mode.theta / kPi).c_str(), mode.index,
                        mode.sign);
    };
    print("symmetric", modes.symmetric);
    print("antisymmetric", modes.antisymmetric);
}

int run(int argc, char** argv) {
    CLI::App app{"driven two-atom far-field emission simulator"};
    app.require_subcommand(1);

    CommonOptions common;

    auto* couplings =
        app.add_subcommand("couplings", "collective coupling constants");
    auto* modes =
        app.add_subcommand("modes", "discrete symmetric/antisymmetric mode "
                                    "directions");
    auto* angular =
        app.add_subcommand("angular", "intensity versus observation angle");
    auto* detuning = app.add_subcommand(
        "detuning", "intensity at fixed angles versus laser detuning");
    auto* contrast = app.add_subcommand(
        "contrast", "contrast factors versus laser detuning");
    auto* reproduce =
        app.add_subcommand("reproduce", "published figure presets");

    std::string out_path, svg_path;
    int points = 721;
    double from = -10.0, to = 10.0;
    std::vector<double> thetas;
    bool with_decomposition = false;
    std::string figure;

    for (CLI::App* cmd :
         {couplings, modes, angular, detuning, contrast, reproduce}) {
        if (cmd != reproduce) common.add_to(cmd);
        if (cmd == couplings || cmd == modes) continue;
        cmd->add_option("--out", out_path, "CSV destination (default stdout)");
        cmd->add_option("--svg", svg_path, "also render an SVG plot");
    }
    angular->add_option("--points", points, "samples on [0, π]")
        ->check(CLI::Range(2, 1000000));
    for (CLI::App* cmd : {detuning, contrast}) {
        cmd->add_option("--from", from, "detuning range start [Γ0]");
        cmd->add_option("--to", to, "detuning range stop [Γ0]");
        cmd->add_option("--points", points, "samples")
            ->check(CLI::Range(2, 1000000));
    }
    detuning->add_option("--theta", thetas,
                         "observation angle [rad]; repeatable");
    detuning->add_flag("--decomposition", with_decomposition,
                       "append i0, ic, is, ie, psi columns");
    reproduce->add_option("figure", figure, "fig4..fig14")
        ->required()
        ->check(CLI::IsMember(preset_names()));
    reproduce->add_option("--jobs", common.jobs, "concurrent sweep workers")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);
    common.merge_config_file();

    if (couplings->parsed()) {
        run_couplings(common);
        return 0;
    }
    if (modes->parsed()) {
        run_modes(common);
        return 0;
    }

    if (reproduce->parsed()) {
        const Preset figure_preset = preset(figure);
        const SweepResult result = run_preset(figure_preset, common.jobs);
        const PlotStyle style = result.columns.front() == "theta"
                                    ? PlotStyle::polar
                                    : PlotStyle::cartesian;
        emit(result, out_path, svg_path, style);
        return 0;
    }

    SweepSpec spec;
    spec.pair = common.pair();
    spec.drive = common.drive();
    spec.mode = common.mode();
    spec.engine = common.engine_kind();
    spec.jobs = common.jobs;
    spec.count = points;

    if (angular->parsed()) {
        spec.axis = SweepAxis::theta;
        spec.start = 0.0;
        spec.stop = kPi;
        spec.observables = {ObservableSpec::intensity()};
        emit(run_sweep(spec), out_path, svg_path, PlotStyle::polar);
        return 0;
    }

    spec.axis = SweepAxis::detuning_l;
    spec.start = from;
    spec.stop = to;
    if (detuning->parsed()) {
        if (thetas.empty()) thetas.push_back(kPi / 2);
        for (double theta : thetas)
            spec.observables.push_back(ObservableSpec::intensity_at(theta));
        if (with_decomposition)
            spec.observables.push_back(ObservableSpec::decomposition());
    } else {
        spec.observables = {ObservableSpec::contrast_antisym(),
                            ObservableSpec::contrast_sym()};
    }
    emit(run_sweep(spec), out_path, svg_path, PlotStyle::cartesian);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
