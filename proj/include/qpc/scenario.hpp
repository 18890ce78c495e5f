#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qpc/dynamics.hpp"
#include "qpc/observables.hpp"

namespace qpc {

enum class Propagator { Blockwise, Full, Both };

Propagator propagator_from_string(const std::string& s);
std::string to_string(Propagator p);

// All run parameters. Initial qubit-pair amplitudes in polar form,
// coherent amplitude alpha = sqrt(nbar) (real, by convention).
struct ScenarioConfig {
    double a_mag = 1.0;
    double a_phase = 0.0;
    double b_mag = 0.0;
    double b_phase = 0.0;
    double nbar = 20.0;
    double R = 0.0;
    double t_max = 60.0;
    int steps = 2400;
    int cutoff = 0;  // 0 = auto rule: ceil(nbar + 10 sqrt(nbar)) + 2
    Propagator propagator = Propagator::Blockwise;
    bool normalize_doe = false;

    // Preset extras. A nonempty snapshot list replaces the uniform grid;
    // compare_excited pairs the run with an excited-start series (fig7).
    std::vector<double> snapshot_times;
    bool compare_excited = false;
    std::string description;

    Complex a() const;
    Complex b() const;
    int effective_cutoff() const;

    void validate() const;  // throws ConfigError
};

// One row of every emitted series.
struct TimeSeriesRecord {
    double t = 0.0;
    Eigen::Vector3d s = Eigen::Vector3d::Zero();      // first qubit
    Eigen::Vector3d t_vec = Eigen::Vector3d::Zero();  // second qubit
    double s_len = 0.0;
    double t_len = 0.0;
    double doe = 0.0;
    double capacity = 0.0;
    double entropy_b = 0.0;
    double purity = 0.0;
    Eigen::Matrix3d cross = Eigen::Matrix3d::Zero();  // kept for checks, not emitted
};

// Builds one series row from a reduced state.
TimeSeriesRecord record_from_state(double t, const QubitPairDensity& rho, bool normalize_doe);

const std::vector<std::string>& preset_names();

// Throws UnknownPreset for names outside preset_names().
ScenarioConfig preset(const std::string& name);

// Uniform grid over [0, t_max] (or the snapshot times when present).
std::vector<double> time_grid(const ScenarioConfig& cfg);

// Evaluates the pipeline on the grid. With Propagator::Both the blockwise
// series is recorded and every emitted scalar is cross-checked against the
// full-space path; disagreement beyond 1e-7 throws OracleMismatch.
std::vector<TimeSeriesRecord> run_scenario(const ScenarioConfig& cfg);

// Applies a JSON object mirroring the ScenarioConfig field names on top of
// `cfg`. Unknown keys are rejected.
void apply_json_config(ScenarioConfig& cfg, const std::string& json_text);

// CSV: fixed header, one row per record, 9 significant digits, LF endings,
// byte-for-byte deterministic. Values below 1e-12 in magnitude print as 0.
void emit_csv(const std::vector<TimeSeriesRecord>& records, std::ostream& out);

enum class PlotKind { Bloch, Doe, Capacity };

PlotKind plot_kind_from_string(const std::string& s);

// Self-contained SVG line chart of the selected series against t. Bloch plots
// |s| (solid) and |t| (dashed) from the primary series; doe/capacity plot the
// primary series solid and, when given, the secondary series dashed.
void emit_plot(const std::vector<TimeSeriesRecord>& records, std::ostream& out, PlotKind kind,
               const std::vector<TimeSeriesRecord>& secondary = {});

}  // namespace qpc
