#include "qpc/scenario.hpp"

#include <cmath>
#include <optional>
#include <utility>

#include "json.hpp"

#include "qpc/errors.hpp"

namespace qpc {

TimeSeriesRecord record_from_state(double t, const QubitPairDensity& rho, bool normalize_doe) {
    const BlochDecomposition d = bloch_decomposition(rho);
    const EntangledDyadic e = entangled_dyadic(d);

    TimeSeriesRecord r;
    r.t = t;
    r.s = d.s;
    r.t_vec = d.t;
    r.cross = d.cross;
    r.s_len = d.s.norm();
    r.t_len = d.t.norm();
    r.doe = degree_of_entanglement(e) / (normalize_doe ? 3.0 : 1.0);
    r.capacity = channel_capacity(rho);
    r.entropy_b = von_neumann_entropy(partial_trace_qubit(rho, Qubit::First));
    r.purity = purity(rho);
    return r;
}

namespace {

TimeSeriesRecord make_record(double t, const JointState& psi, bool normalize_doe) {
    return record_from_state(t, partial_trace_field(psi), normalize_doe);
}

void check_oracle_agreement(const TimeSeriesRecord& block, const TimeSeriesRecord& full) {
    constexpr double kTol = 1e-7;
    const std::pair<const char*, double> deltas[] = {
        {"s_x", block.s[0] - full.s[0]},         {"s_y", block.s[1] - full.s[1]},
        {"s_z", block.s[2] - full.s[2]},         {"s_len", block.s_len - full.s_len},
        {"t_x", block.t_vec[0] - full.t_vec[0]}, {"t_y", block.t_vec[1] - full.t_vec[1]},
        {"t_z", block.t_vec[2] - full.t_vec[2]}, {"t_len", block.t_len - full.t_len},
        {"doe", block.doe - full.doe},           {"capacity", block.capacity - full.capacity},
        {"entropy_B", block.entropy_b - full.entropy_b}, {"purity", block.purity - full.purity},
    };
    for (const auto& [field, delta] : deltas) {
        if (std::abs(delta) > kTol) throw OracleMismatch(block.t, field, std::abs(delta));
    }
}

ScenarioConfig base_preset(double a_mag, double b_mag, double nbar, double R,
                           std::string description) {
    ScenarioConfig cfg;
    cfg.a_mag = a_mag;
    cfg.b_mag = b_mag;
    cfg.nbar = nbar;
    cfg.R = R;
    cfg.propagator = Propagator::Both;
    cfg.description = std::move(description);
    return cfg;
}

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

Propagator propagator_from_string(const std::string& s) {
    if (s == "blockwise") return Propagator::Blockwise;
    if (s == "full") return Propagator::Full;
    if (s == "both") return Propagator::Both;
    throw ConfigError("unknown propagator '" + s + "' (expected blockwise|full|both)");
}

std::string to_string(Propagator p) {
    switch (p) {
        case Propagator::Blockwise: return "blockwise";
        case Propagator::Full: return "full";
        case Propagator::Both: return "both";
    }
    return "?";
}

Complex ScenarioConfig::a() const {
    const double scale = std::sqrt(a_mag * a_mag + b_mag * b_mag);
    return std::polar(a_mag / scale, a_phase);
}

Complex ScenarioConfig::b() const {
    const double scale = std::sqrt(a_mag * a_mag + b_mag * b_mag);
    return std::polar(b_mag / scale, b_phase);
}

int ScenarioConfig::effective_cutoff() const {
    return cutoff > 0 ? cutoff : default_cutoff(nbar);
}

void ScenarioConfig::validate() const {
    if (std::abs(a_mag * a_mag + b_mag * b_mag - 1.0) > 1e-9) {
        throw ConfigError("|a|^2 + |b|^2 must equal 1 within 1e-9");
    }
    if (nbar < 0.0) throw ConfigError("nbar must be >= 0");
    if (R < 0.0) throw ConfigError("R must be >= 0");
    if (snapshot_times.empty()) {
        if (steps < 2) throw ConfigError("steps must be >= 2");
        if (!(t_max > 0.0)) throw ConfigError("t_max must be > 0");
    }
    if (cutoff < 0) throw ConfigError("cutoff must be >= 0 (0 = auto)");
    for (const double t : snapshot_times) {
        if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("snapshot times must be >= 0");
    }
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "fig1a", "fig1b", "fig2",  "fig3a", "fig3b", "fig3c", "fig3d", "fig4a",
        "fig4b", "fig5a", "fig5b", "fig6a", "fig6b", "fig7a", "fig7b",
    };
    return names;
}

ScenarioConfig preset(const std::string& name) {
    // Excited start = (a,b) = (1,0); the balanced partial start a = b = 1/sqrt(2)
    // is the documented default where captions leave (a,b) open.
    if (name == "fig1a") return base_preset(1, 0, 20, 0.003, "Bloch vectors, excited start, nbar=20, R=0.003");
    if (name == "fig1b") return base_preset(1, 0, 20, 0.9, "Bloch vectors, excited start, nbar=20, R=0.9");
    if (name == "fig2") {
        ScenarioConfig cfg = base_preset(1, 0, 20, 0.9, "First-qubit Bloch snapshots, excited start, nbar=20, R=0.9");
        cfg.snapshot_times = {10.2, 10.5, 10.6, 10.7, 10.8, 11.0, 11.5, 11.6};
        return cfg;
    }
    if (name == "fig3a") return base_preset(kInvSqrt2, kInvSqrt2, 20, 0.003, "Bloch vectors, partial start, nbar=20, R=0.003");
    if (name == "fig3b") return base_preset(kInvSqrt2, kInvSqrt2, 20, 0.9, "Bloch vectors, partial start, nbar=20, R=0.9");
    if (name == "fig3c") return base_preset(kInvSqrt2, kInvSqrt2, 10, 0.003, "Bloch vectors, partial start, nbar=10, R=0.003");
    if (name == "fig3d") return base_preset(kInvSqrt2, kInvSqrt2, 10, 0.9, "Bloch vectors, partial start, nbar=10, R=0.9");
    if (name == "fig4a") return base_preset(1, 0, 20, 0.003, "DoE, excited start, nbar=20, R=0.003");
    if (name == "fig4b") return base_preset(1, 0, 20, 0.9, "DoE, excited start, nbar=20, R=0.9");
    if (name == "fig5a") return base_preset(kInvSqrt2, kInvSqrt2, 20, 0.003, "DoE, partial start, nbar=20, R=0.003");
    if (name == "fig5b") return base_preset(kInvSqrt2, kInvSqrt2, 20, 0.9, "DoE, partial start, nbar=20, R=0.9");
    if (name == "fig6a") return base_preset(1, 0, 10, 0.003, "DoE, excited start, nbar=10, R=0.003");
    if (name == "fig6b") return base_preset(kInvSqrt2, kInvSqrt2, 10, 0.003, "DoE, partial start, nbar=10, R=0.003");
    if (name == "fig7a") {
        ScenarioConfig cfg = base_preset(kInvSqrt2, kInvSqrt2, 10, 0.9, "Capacity, partial vs excited start, nbar=10, R=0.9");
        cfg.compare_excited = true;
        return cfg;
    }
    if (name == "fig7b") {
        ScenarioConfig cfg = base_preset(kInvSqrt2, kInvSqrt2, 20, 0.9,
                                         "Capacity, partial vs excited start, R=0.9; caption says nbar=20, "
                                         "body text says nbar=10 - the caption wins");
        cfg.compare_excited = true;
        return cfg;
    }
    throw UnknownPreset("unknown preset '" + name + "'");
}

std::vector<double> time_grid(const ScenarioConfig& cfg) {
    if (!cfg.snapshot_times.empty()) return cfg.snapshot_times;
    std::vector<double> times(cfg.steps);
    const double dt = cfg.t_max / (cfg.steps - 1);
    for (int k = 0; k < cfg.steps; ++k) times[k] = k * dt;
    return times;
}

std::vector<TimeSeriesRecord> run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();
    const Complex a = cfg.a();
    const Complex b = cfg.b();
    const Complex alpha = std::sqrt(cfg.nbar);
    const int cutoff = cfg.effective_cutoff();
    const std::vector<double> times = time_grid(cfg);

    ModelParams params;
    params.R = cfg.R;
    params.resonant = true;

    const bool want_block = cfg.propagator != Propagator::Full;
    const bool want_full = cfg.propagator != Propagator::Blockwise;

    std::optional<BlockwisePropagator> block_prop;
    if (want_block) block_prop.emplace(a, b, alpha, params, cutoff);

    std::vector<JointState> full_states;
    if (want_full) {
        const JointState psi0 = initial_joint_state(a, b, alpha, cutoff);
        FullPropagator full_prop(params, cutoff);
        full_states = full_prop.evolve_grid(psi0, times);
    }

    std::vector<TimeSeriesRecord> out;
    out.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        std::optional<TimeSeriesRecord> rec_block, rec_full;
        if (want_block) rec_block = make_record(t, block_prop->evolve(t), cfg.normalize_doe);
        if (want_full) rec_full = make_record(t, full_states[i], cfg.normalize_doe);
        if (rec_block && rec_full) check_oracle_agreement(*rec_block, *rec_full);
        out.push_back(rec_block ? *rec_block : *rec_full);
    }
    return out;
}

void apply_json_config(ScenarioConfig& cfg, const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config file must hold a JSON object");

    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "a_mag") cfg.a_mag = value.get<double>();
            else if (key == "a_phase") cfg.a_phase = value.get<double>();
            else if (key == "b_mag") cfg.b_mag = value.get<double>();
            else if (key == "b_phase") cfg.b_phase = value.get<double>();
            else if (key == "nbar") cfg.nbar = value.get<double>();
            else if (key == "R") cfg.R = value.get<double>();
            else if (key == "t_max") cfg.t_max = value.get<double>();
            else if (key == "steps") cfg.steps = value.get<int>();
            else if (key == "cutoff") cfg.cutoff = value.get<int>();
            else if (key == "propagator") cfg.propagator = propagator_from_string(value.get<std::string>());
            else if (key == "normalize_doe") cfg.normalize_doe = value.get<bool>();
            else throw ConfigError("unknown config key '" + key + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
}

}  // namespace qpc
