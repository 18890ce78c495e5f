#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "qpc/errors.hpp"
#include "qpc/scenario.hpp"

namespace qpc {

namespace {

// Sub-1e-12 magnitudes are propagator noise; printing them as 0 keeps the
// output deterministic across equivalent runs.
std::string csv_value(double v) {
    if (std::abs(v) < 1e-12) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string csv_time(double t) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9f", t);
    return buf;
}

std::string px(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

struct Series {
    std::string label;
    std::string css_class;
    std::vector<double> values;
};

double series_value(const TimeSeriesRecord& r, PlotKind kind, bool second_bloch) {
    switch (kind) {
        case PlotKind::Bloch: return second_bloch ? r.t_len : r.s_len;
        case PlotKind::Doe: return r.doe;
        case PlotKind::Capacity: return r.capacity;
    }
    return 0.0;
}

}  // namespace

void emit_csv(const std::vector<TimeSeriesRecord>& records, std::ostream& out) {
    if (records.empty()) throw ConfigError("emit_csv: no records to emit");
    out << "t,s_x,s_y,s_z,s_len,t_x,t_y,t_z,t_len,doe,capacity,entropy_B,purity\n";
    for (const TimeSeriesRecord& r : records) {
        out << csv_time(r.t) << ',' << csv_value(r.s[0]) << ',' << csv_value(r.s[1]) << ','
            << csv_value(r.s[2]) << ',' << csv_value(r.s_len) << ',' << csv_value(r.t_vec[0])
            << ',' << csv_value(r.t_vec[1]) << ',' << csv_value(r.t_vec[2]) << ','
            << csv_value(r.t_len) << ',' << csv_value(r.doe) << ',' << csv_value(r.capacity)
            << ',' << csv_value(r.entropy_b) << ',' << csv_value(r.purity) << '\n';
    }
    if (!out) throw Error("emit_csv: write failure");
}

PlotKind plot_kind_from_string(const std::string& s) {
    if (s == "bloch") return PlotKind::Bloch;
    if (s == "doe") return PlotKind::Doe;
    if (s == "capacity") return PlotKind::Capacity;
    throw ConfigError("unknown plot kind '" + s + "' (expected bloch|doe|capacity)");
}

void emit_plot(const std::vector<TimeSeriesRecord>& records, std::ostream& out, PlotKind kind,
               const std::vector<TimeSeriesRecord>& secondary) {
    if (records.empty()) throw ConfigError("emit_plot: no records to plot");

    std::vector<Series> series;
    if (kind == PlotKind::Bloch) {
        Series s1{"|s| (qubit 1)", "solid", {}};
        Series s2{"|t| (qubit 2)", "dot", {}};
        for (const auto& r : records) {
            s1.values.push_back(series_value(r, kind, false));
            s2.values.push_back(series_value(r, kind, true));
        }
        series = {std::move(s1), std::move(s2)};
    } else {
        const char* base = kind == PlotKind::Doe ? "DoE" : "capacity (bits)";
        Series s1{secondary.empty() ? base : std::string(base) + ", partial start", "solid", {}};
        for (const auto& r : records) s1.values.push_back(series_value(r, kind, false));
        series.push_back(std::move(s1));
        if (!secondary.empty()) {
            Series s2{std::string(base) + ", excited start", "dot", {}};
            for (const auto& r : secondary) s2.values.push_back(series_value(r, kind, false));
            series.push_back(std::move(s2));
        }
    }

    const double t_lo = records.front().t;
    const double t_hi = std::max(records.back().t, t_lo + 1e-9);
    double y_hi = 1.0;
    if (kind == PlotKind::Bloch) {
        y_hi = 1.05;
    } else if (kind == PlotKind::Capacity) {
        y_hi = 2.05;
    } else {
        double peak = 0.0;
        for (const Series& s : series)
            for (const double v : s.values) peak = std::max(peak, v);
        y_hi = peak > 0.0 ? 1.05 * peak : 1.0;
    }

    constexpr double kLeft = 70, kRight = 830, kTop = 40, kBottom = 470;
    auto x_px = [&](double t) { return kLeft + (t - t_lo) / (t_hi - t_lo) * (kRight - kLeft); };
    auto y_px = [&](double v) { return kBottom - v / y_hi * (kBottom - kTop); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"880\" height=\"520\" "
           "viewBox=\"0 0 880 520\">\n"
        << "<style>\n"
           ".axis{stroke:#444;stroke-width:1}\n"
           ".grid{stroke:#e2e2e2;stroke-width:0.6}\n"
           ".solid{fill:none;stroke:#1a5fb4;stroke-width:1.4}\n"
           ".dot{fill:none;stroke:#c01c28;stroke-width:1.4;stroke-dasharray:5 4}\n"
           "text{font-family:sans-serif;font-size:12px;fill:#222}\n"
           "</style>\n";

    constexpr int kTicks = 6;
    for (int k = 0; k < kTicks; ++k) {
        const double t = t_lo + (t_hi - t_lo) * k / (kTicks - 1);
        const double x = x_px(t);
        out << "<line class=\"grid\" x1=\"" << px(x) << "\" y1=\"" << px(kTop) << "\" x2=\""
            << px(x) << "\" y2=\"" << px(kBottom) << "\"/>\n"
            << "<text x=\"" << px(x - 8) << "\" y=\"" << px(kBottom + 18) << "\">"
            << tick_label(t) << "</text>\n";
        const double v = y_hi * k / (kTicks - 1);
        const double y = y_px(v);
        out << "<line class=\"grid\" x1=\"" << px(kLeft) << "\" y1=\"" << px(y) << "\" x2=\""
            << px(kRight) << "\" y2=\"" << px(y) << "\"/>\n"
            << "<text x=\"" << px(kLeft - 45) << "\" y=\"" << px(y + 4) << "\">"
            << tick_label(v) << "</text>\n";
    }
    out << "<line class=\"axis\" x1=\"" << px(kLeft) << "\" y1=\"" << px(kBottom) << "\" x2=\""
        << px(kRight) << "\" y2=\"" << px(kBottom) << "\"/>\n"
        << "<line class=\"axis\" x1=\"" << px(kLeft) << "\" y1=\"" << px(kTop) << "\" x2=\""
        << px(kLeft) << "\" y2=\"" << px(kBottom) << "\"/>\n"
        << "<text x=\"" << px((kLeft + kRight) / 2 - 30) << "\" y=\"505\">scaled time</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const Series& s = series[si];
        out << "<polyline class=\"" << s.css_class << "\" points=\"";
        const auto& source = (si == 1 && !secondary.empty() && kind != PlotKind::Bloch)
                                 ? secondary
                                 : records;
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            const double t = source[i].t;
            const double v = std::clamp(s.values[i], 0.0, y_hi);
            out << px(x_px(t)) << ',' << px(y_px(v)) << ' ';
        }
        out << "\"/>\n";
        out << "<line class=\"" << s.css_class << "\" x1=\"" << px(kLeft + 12) << "\" y1=\""
            << px(kTop - 18 + 16 * static_cast<double>(si)) << "\" x2=\"" << px(kLeft + 44)
            << "\" y2=\"" << px(kTop - 18 + 16 * static_cast<double>(si)) << "\"/>\n"
            << "<text x=\"" << px(kLeft + 50) << "\" y=\""
            << px(kTop - 14 + 16 * static_cast<double>(si)) << "\">" << s.label << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw Error("emit_plot: write failure");
}

}  // namespace qpc
