#include "autoeq/charts.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>

namespace autoeq {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 24.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 56.0;

constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

struct Point {
    double x;
    double y;
};

struct Series {
    std::string label;
    std::string color;
    std::vector<Point> points;
    bool dashed = false;
};

struct Marker {
    Point at;
    std::string color;
};

struct Chart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    std::vector<Marker> markers;
    std::optional<std::pair<double, double>> y_range;
};

std::string fixed(double v) {
    std::array<char, 48> buf{};
    std::snprintf(buf.data(), buf.size(), "%.2f", v);
    return buf.data();
}

std::string tick_label(double v) {
    if (std::abs(v) < 1e-12) v = 0.0;
    std::array<char, 48> buf{};
    std::snprintf(buf.data(), buf.size(), "%g", v);
    return buf.data();
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

// Data range widened by 5% on each side; degenerate ranges get a unit pad.
std::pair<double, double> padded(double lo, double hi) {
    if (!(hi > lo)) {
        const double pad = std::max(1.0, std::abs(lo) * 0.05);
        return {lo - pad, hi + pad};
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

double nice_step(double span) {
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    if (norm < 1.5) return mag;
    if (norm < 3.5) return 2.0 * mag;
    if (norm < 7.5) return 5.0 * mag;
    return 10.0 * mag;
}

std::string render(const Chart& chart) {
    double x_lo = std::numeric_limits<double>::infinity();
    double x_hi = -x_lo;
    double y_lo = x_lo;
    double y_hi = -x_lo;
    auto extend = [&](Point p) {
        x_lo = std::min(x_lo, p.x);
        x_hi = std::max(x_hi, p.x);
        y_lo = std::min(y_lo, p.y);
        y_hi = std::max(y_hi, p.y);
    };
    for (const auto& s : chart.series) std::for_each(s.points.begin(), s.points.end(), extend);
    for (const auto& m : chart.markers) extend(m.at);
    if (!std::isfinite(x_lo)) x_lo = x_hi = y_lo = y_hi = 0.0;
    if (chart.y_range) std::tie(y_lo, y_hi) = *chart.y_range;
    std::tie(x_lo, x_hi) = padded(x_lo, x_hi);
    std::tie(y_lo, y_hi) = padded(y_lo, y_hi);

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
    auto sy = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kWidth) + "\" height=\"" + fixed(kHeight) +
           "\" viewBox=\"0 0 " + fixed(kWidth) + " " + fixed(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fixed(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">" + escape(chart.title) + "</text>\n";
    svg += "<rect x=\"" + fixed(kLeft) + "\" y=\"" + fixed(kTop) + "\" width=\"" + fixed(plot_w) + "\" height=\"" +
           fixed(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";

    const double x_step = nice_step(x_hi - x_lo);
    for (double t = std::ceil(x_lo / x_step) * x_step; t <= x_hi; t += x_step) {
        svg += "<line x1=\"" + fixed(sx(t)) + "\" y1=\"" + fixed(kTop + plot_h) + "\" x2=\"" + fixed(sx(t)) +
               "\" y2=\"" + fixed(kTop + plot_h + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fixed(sx(t)) + "\" y=\"" + fixed(kTop + plot_h + 19) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + tick_label(t) + "</text>\n";
    }
    const double y_step = nice_step(y_hi - y_lo);
    for (double t = std::ceil(y_lo / y_step) * y_step; t <= y_hi; t += y_step) {
        svg += "<line x1=\"" + fixed(kLeft - 5) + "\" y1=\"" + fixed(sy(t)) + "\" x2=\"" + fixed(kLeft) + "\" y2=\"" +
               fixed(sy(t)) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fixed(kLeft - 8) + "\" y=\"" + fixed(sy(t) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + tick_label(t) + "</text>\n";
    }
    svg += "<text x=\"" + fixed(kLeft + plot_w / 2) + "\" y=\"" + fixed(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + escape(chart.x_label) +
           "</text>\n";
    svg += "<text x=\"18\" y=\"" + fixed(kTop + plot_h / 2) + "\" transform=\"rotate(-90 18 " +
           fixed(kTop + plot_h / 2) + ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
           escape(chart.y_label) + "</text>\n";

    for (const auto& s : chart.series) {
        svg += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.8\"";
        if (s.dashed) svg += " stroke-dasharray=\"6 4\"";
        svg += " points=\"";
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            if (i > 0) svg += ' ';
            svg += fixed(sx(s.points[i].x)) + "," + fixed(sy(std::clamp(s.points[i].y, y_lo, y_hi)));
        }
        svg += "\"/>\n";
    }
    for (const auto& m : chart.markers) {
        svg += "<circle cx=\"" + fixed(sx(m.at.x)) + "\" cy=\"" + fixed(sy(m.at.y)) + "\" r=\"4.5\" fill=\"" + m.color +
               "\"/>\n";
    }

    double legend_y = kTop + 16;
    const auto labelled = std::count_if(chart.series.begin(), chart.series.end(),
                                        [](const Series& s) { return !s.label.empty(); });
    if (labelled > 0) {
        svg += "<rect x=\"" + fixed(kLeft + plot_w - 156) + "\" y=\"" + fixed(kTop + 4) +
               "\" width=\"150\" height=\"" + fixed(16.0 * static_cast<double>(labelled) + 6) +
               "\" fill=\"white\" fill-opacity=\"0.85\"/>\n";
    }
    for (const auto& s : chart.series) {
        if (s.label.empty()) continue;
        const double lx = kLeft + plot_w - 150;
        svg += "<line x1=\"" + fixed(lx) + "\" y1=\"" + fixed(legend_y - 4) + "\" x2=\"" + fixed(lx + 22) +
               "\" y2=\"" + fixed(legend_y - 4) + "\" stroke=\"" + s.color + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fixed(lx + 28) + "\" y=\"" + fixed(legend_y) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(s.label) + "</text>\n";
        legend_y += 16;
    }
    svg += "</svg>\n";
    return svg;
}

Series sweep_series(const SweepResult& result, std::string label, const char* color,
                    double (*value)(const EquilibriumPoint&)) {
    Series s{std::move(label), color, {}, false};
    s.points.reserve(result.points.size());
    for (const auto& p : result.points) s.points.push_back({p.a_auto, value(p)});
    return s;
}

double pct_auto(const EquilibriumPoint& p) {
    const double capital = p.split.k_old + p.split.k_auto;
    return capital > 0.0 ? 100.0 * p.split.k_auto / capital : 0.0;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) throw std::ios_base::failure("cannot write " + path.string());
}

}  // namespace

std::vector<ProfitCurve> make_profit_curves(const EconomyParams& params, const std::vector<double>& a_autos,
                                            int n_points, const SolverConfig& solver) {
    std::vector<ProfitCurve> curves;
    curves.reserve(a_autos.size());
    for (double a : a_autos) {
        const EconomyParams at = params.with_a_auto(a);
        curves.push_back({a, profit_curve(at, n_points, solver.domain_margin), maximize_profit(at, solver)});
    }
    return curves;
}

std::string render_labor_supply_svg(const HouseholdPrefs& prefs) {
    constexpr int kSamples = 400;
    // The curve diverges at gamma*l_max; stop where the wage reaches 10 w_min.
    const double singular = prefs.singular_labor();
    const double w_min = prefs.w_min();
    double lo = 0.0;
    double hi = 0.0;
    if (prefs.regime() == SupplyRegime::positive) {
        hi = singular * 0.9;
    } else {
        lo = singular + (prefs.l_max - singular) * 0.1;
        hi = prefs.l_max * (1.0 - 1e-9);
    }

    Chart chart{"Labor supply", "Labor L", "Wage w(L)", {}, {}, std::nullopt};
    Series curve{"w(L)", kPalette[0], {}, false};
    for (int i = 0; i <= kSamples; ++i) {
        const double labor = lo + (hi - lo) * i / kSamples;
        curve.points.push_back({labor, labor_supply_wage(labor, prefs)});
    }
    chart.series.push_back(std::move(curve));
    chart.series.push_back({"w_min", "#7f7f7f", {{lo, w_min}, {hi, w_min}}, true});
    return render(chart);
}

std::string render_profit_landscape_svg(const std::vector<ProfitCurve>& curves) {
    double x_max = 0.0;
    double max_optimum = 0.0;
    for (const auto& c : curves) {
        if (!c.samples.empty()) x_max = std::max(x_max, c.samples.back().labor);
        max_optimum = std::max(max_optimum, c.optimum.l_star);
    }
    const double visible = std::min(x_max, std::max(4.0 * max_optimum, 0.2 * x_max));

    Chart chart{"Profit landscape", "Labor L", "Profit", {}, {}, std::nullopt};
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& c = curves[i];
        const char* color = kPalette[i % kPalette.size()];
        Series s{"a_auto = " + tick_label(c.a_auto), color, {}, false};
        for (const auto& sample : c.samples) {
            if (sample.labor <= visible) s.points.push_back({sample.labor, sample.profit});
        }
        chart.series.push_back(std::move(s));
        chart.markers.push_back({{c.optimum.l_star, c.optimum.profit}, color});
    }
    return render(chart);
}

std::string render_sweep_panel_svg(const SweepResult& result, SweepPanel panel) {
    Chart chart;
    chart.x_label = "Automation productivity a_auto";
    switch (panel) {
        case SweepPanel::production:
            chart.title = "Production";
            chart.y_label = "f*";
            chart.series.push_back(
                sweep_series(result, "", kPalette[0], [](const EquilibriumPoint& p) { return p.f_star; }));
            break;
        case SweepPanel::capital_allocation:
            chart.title = "Capital allocation";
            chart.y_label = "Percent of capital";
            chart.y_range = std::pair{0.0, 100.0};
            chart.series.push_back(sweep_series(result, "old technology", kPalette[0],
                                                [](const EquilibriumPoint& p) { return 100.0 - pct_auto(p); }));
            chart.series.push_back(sweep_series(result, "automation", kPalette[1], &pct_auto));
            break;
        case SweepPanel::profit:
            chart.title = "Profit";
            chart.y_label = "Pi*";
            chart.series.push_back(
                sweep_series(result, "", kPalette[0], [](const EquilibriumPoint& p) { return p.profit; }));
            break;
        case SweepPanel::labor:
            chart.title = "Labor employment";
            chart.y_label = "L*";
            chart.series.push_back(
                sweep_series(result, "", kPalette[0], [](const EquilibriumPoint& p) { return p.l_star; }));
            break;
    }
    return render(chart);
}

std::vector<std::string> chart_file_names() {
    return {"labor_supply.svg",     "profit_landscape.svg", "sweep_production.svg",
            "sweep_capital.svg",    "sweep_profit.svg",     "sweep_labor.svg"};
}

std::vector<std::filesystem::path> emit_charts(const ChartInputs& inputs, const std::filesystem::path& directory) {
    std::filesystem::create_directories(directory);
    const auto names = chart_file_names();
    const std::array<std::string, 6> contents{
        render_labor_supply_svg(inputs.prefs),
        render_profit_landscape_svg(inputs.curves),
        render_sweep_panel_svg(inputs.sweep, SweepPanel::production),
        render_sweep_panel_svg(inputs.sweep, SweepPanel::capital_allocation),
        render_sweep_panel_svg(inputs.sweep, SweepPanel::profit),
        render_sweep_panel_svg(inputs.sweep, SweepPanel::labor),
    };
    std::vector<std::filesystem::path> written;
    for (std::size_t i = 0; i < names.size(); ++i) {
        written.push_back(directory / names[i]);
        write_file(written.back(), contents[i]);
    }
    return written;
}

}  // namespace autoeq
