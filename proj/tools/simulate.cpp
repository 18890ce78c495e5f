// Command-line front end: scenario runs, figure presets, CSV and SVG output.
//
// Exit codes: 0 success, 2 configuration error, 3 propagator cross-check
// mismatch, 4 Fock cutoff insufficient.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qpc/errors.hpp"
#include "qpc/scenario.hpp"

namespace {

std::string sibling_path(const std::string& out_path, const std::string& tag,
                         const std::string& new_ext) {
    const std::size_t slash = out_path.find_last_of('/');
    const std::size_t dot = out_path.find_last_of('.');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    const std::string stem = has_ext ? out_path.substr(0, dot) : out_path;
    const std::string ext = new_ext.empty() ? (has_ext ? out_path.substr(dot) : "") : new_ext;
    return stem + tag + ext;
}

void write_csv_file(const std::vector<qpc::TimeSeriesRecord>& records, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw qpc::Error("cannot open output file '" + path + "'");
    qpc::emit_csv(records, file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two charge qubits coupled to a single cavity mode: Bloch-vector, "
                 "entanglement and dense-coding-capacity time series"};

    std::string preset_name, config_path, out_path, propagator_name, plot_name;
    bool list_presets = false;
    bool normalize_doe = false;
    double a_mag = 1.0, a_phase = 0.0, b_mag = 0.0, b_phase = 0.0;
    double nbar = 20.0, ratio = 0.0, t_max = 60.0;
    int steps = 2400, cutoff = 0;

    auto* preset_opt = app.add_option("--preset", preset_name, "named parameter preset");
    auto* config_opt =
        app.add_option("--config", config_path, "JSON config file (field names mirror the flags)");
    auto* a_mag_opt = app.add_option("--a-mag", a_mag, "|a| of a|ee> + b|gg>");
    auto* a_phase_opt = app.add_option("--a-phase", a_phase, "arg(a), radians");
    auto* b_mag_opt = app.add_option("--b-mag", b_mag, "|b|");
    auto* b_phase_opt = app.add_option("--b-phase", b_phase, "arg(b), radians");
    auto* nbar_opt = app.add_option("--nbar", nbar, "mean photon number of the coherent field");
    auto* ratio_opt = app.add_option("--R", ratio, "relative coupling lambda2/lambda1");
    auto* tmax_opt = app.add_option("--tmax", t_max, "end of the scaled-time grid");
    auto* steps_opt = app.add_option("--steps", steps, "grid points in [0, tmax]");
    auto* cutoff_opt = app.add_option("--cutoff", cutoff, "Fock cutoff (0 = auto rule)");
    auto* propagator_opt =
        app.add_option("--propagator", propagator_name, "blockwise|full|both (both cross-checks)");
    auto* normalize_opt =
        app.add_flag("--normalize-doe", normalize_doe, "report DoE/3 so Bell states read 1");
    app.add_option("--out", out_path, "CSV output path (default: stdout)");
    app.add_option("--plot", plot_name, "also write an SVG chart: bloch|doe|capacity");
    app.add_flag("--list-presets", list_presets, "print preset names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list_presets) {
            for (const std::string& name : qpc::preset_names()) {
                std::cout << name << "  -  " << qpc::preset(name).description << "\n";
            }
            return 0;
        }

        // Precedence: preset, then config file, then explicit flags.
        qpc::ScenarioConfig cfg;
        if (preset_opt->count() > 0) cfg = qpc::preset(preset_name);
        if (config_opt->count() > 0) {
            std::ifstream file(config_path);
            if (!file) throw qpc::ConfigError("cannot read config file '" + config_path + "'");
            std::stringstream buffer;
            buffer << file.rdbuf();
            qpc::apply_json_config(cfg, buffer.str());
        }
        if (a_mag_opt->count()) cfg.a_mag = a_mag;
        if (a_phase_opt->count()) cfg.a_phase = a_phase;
        if (b_mag_opt->count()) cfg.b_mag = b_mag;
        if (b_phase_opt->count()) cfg.b_phase = b_phase;
        if (nbar_opt->count()) cfg.nbar = nbar;
        if (ratio_opt->count()) cfg.R = ratio;
        if (tmax_opt->count()) cfg.t_max = t_max;
        if (steps_opt->count()) cfg.steps = steps;
        if (cutoff_opt->count()) cfg.cutoff = cutoff;
        if (normalize_opt->count()) cfg.normalize_doe = normalize_doe;
        if (propagator_opt->count()) cfg.propagator = qpc::propagator_from_string(propagator_name);

        const std::vector<qpc::TimeSeriesRecord> records = qpc::run_scenario(cfg);

        std::vector<qpc::TimeSeriesRecord> excited_records;
        if (cfg.compare_excited) {
            qpc::ScenarioConfig excited = cfg;
            excited.a_mag = 1.0;
            excited.a_phase = 0.0;
            excited.b_mag = 0.0;
            excited.b_phase = 0.0;
            excited_records = qpc::run_scenario(excited);
        }

        if (out_path.empty()) {
            qpc::emit_csv(records, std::cout);
            if (!excited_records.empty()) qpc::emit_csv(excited_records, std::cout);
        } else {
            write_csv_file(records, out_path);
            if (!excited_records.empty()) {
                write_csv_file(excited_records, sibling_path(out_path, ".excited", ""));
            }
        }

        if (!plot_name.empty()) {
            if (out_path.empty()) {
                throw qpc::ConfigError("--plot requires --out to derive the SVG path");
            }
            const qpc::PlotKind kind = qpc::plot_kind_from_string(plot_name);
            const std::string svg_path = sibling_path(out_path, "." + plot_name, ".svg");
            std::ofstream svg(svg_path, std::ios::binary);
            if (!svg) throw qpc::Error("cannot open plot file '" + svg_path + "'");
            qpc::emit_plot(records, svg, kind, excited_records);
        }
        return 0;
    } catch (const qpc::OracleMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qpc::CutoffTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const qpc::UnknownPreset& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qpc::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qpc::NotNormalized& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
