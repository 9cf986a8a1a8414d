#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "autoeq/charts.hpp"
#include "autoeq/config.hpp"
#include "autoeq/errors.hpp"
#include "autoeq/report.hpp"
#include "autoeq/sweep.hpp"

namespace autoeq::cli {

namespace fs = std::filesystem;

namespace {

struct CommonFlags {
    std::string config;
    std::string out;
    std::string format;
    bool charts = false;
};

void add_common(CLI::App& cmd, CommonFlags& flags) {
    cmd.add_option("--config", flags.config, "Config file (key = value lines)")->check(CLI::ExistingFile);
    cmd.add_option("--out", flags.out, "Output file, or directory for data and charts");
    cmd.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd.add_flag("--charts", flags.charts, "Write SVG charts");
}

// Where data goes and where charts go for a given --out value.
struct Destination {
    std::optional<fs::path> data_file;
    fs::path chart_dir = ".";
};

Destination resolve_out(const std::string& out, const std::string& default_name) {
    Destination dest;
    if (out.empty()) return dest;
    const fs::path path(out);
    const bool is_dir = fs::is_directory(path) || out.back() == '/';
    if (is_dir) {
        fs::create_directories(path);
        dest.data_file = path / default_name;
        dest.chart_dir = path;
    } else {
        dest.data_file = path;
        if (path.has_parent_path()) {
            fs::create_directories(path.parent_path());
            dest.chart_dir = path.parent_path();
        }
    }
    return dest;
}

void emit(const Destination& dest, std::ostream& out, const std::function<void(std::ostream&)>& writer) {
    if (!dest.data_file) {
        writer(out);
        out.flush();
        return;
    }
    std::ofstream file(*dest.data_file, std::ios::binary | std::ios::trunc);
    if (!file) throw std::ios_base::failure("cannot open " + dest.data_file->string());
    writer(file);
}

std::string describe(const std::optional<double>& v) {
    if (!v) return "not reached";
    std::ostringstream s;
    s << std::setprecision(6) << *v;
    return s.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"General-equilibrium solver for a monopolist-monopsonist economy with automation"};
    app.require_subcommand(1);

    CommonFlags flags;
    double a_auto = 0.0;
    std::optional<double> a_min;
    std::optional<double> a_max;
    std::optional<int> steps;
    unsigned threads = 1;
    std::optional<double> target_mpk;

    auto* equilibrium = app.add_subcommand("equilibrium", "Solve one equilibrium");
    add_common(*equilibrium, flags);
    equilibrium->add_option("--a-auto", a_auto, "Automation productivity")->check(CLI::NonNegativeNumber);

    auto* sweep = app.add_subcommand("sweep", "Comparative statics over a_auto");
    add_common(*sweep, flags);
    sweep->add_option("--a-min", a_min, "Lower a_auto bound");
    sweep->add_option("--a-max", a_max, "Upper a_auto bound");
    sweep->add_option("--steps", steps, "Grid points");
    sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

    auto* calibrate = app.add_subcommand("calibrate", "Calibrate a_old to a target marginal product of capital");
    add_common(*calibrate, flags);
    calibrate->add_option("--target-mpk", target_mpk, "Target MPK at a_auto = 0")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        RunConfig cfg = flags.config.empty() ? RunConfig{} : load_config(flags.config);
        cfg.charts = flags.charts;
        cfg.threads = threads;
        if (a_min) cfg.a_min = *a_min;
        if (a_max) cfg.a_max = *a_max;
        if (steps) cfg.steps = *steps;
        if (!flags.out.empty()) cfg.out = flags.out;

        if (*equilibrium) {
            cfg.format = flags.format == "csv" ? OutputFormat::csv : OutputFormat::json;
            const EconomyParams params = cfg.resolved_economy(a_auto);
            const EquilibriumPoint point = maximize_profit(params, cfg.solver());
            const auto dest = resolve_out(flags.out, cfg.format == OutputFormat::json ? "equilibrium.json"
                                                                                      : "equilibrium.csv");
            emit(dest, out, [&](std::ostream& s) {
                if (cfg.format == OutputFormat::json) {
                    write_point_json(point, s);
                } else {
                    write_point_csv(point, s);
                }
            });
            err << "a_old = " << params.tech.a_old << ", a_auto = " << a_auto << ": L* = " << point.l_star
                << ", w = " << point.wage << ", f* = " << point.f_star << ", profit = " << point.profit << '\n';
            if (cfg.charts) {
                const std::vector<ProfitCurve> curves = make_profit_curves(params, {a_auto}, 2001, cfg.solver());
                std::filesystem::create_directories(dest.chart_dir);
                std::ofstream(dest.chart_dir / "labor_supply.svg", std::ios::binary)
                    << render_labor_supply_svg(params.prefs);
                std::ofstream(dest.chart_dir / "profit_landscape.svg", std::ios::binary)
                    << render_profit_landscape_svg(curves);
            }
            return kExitOk;
        }

        if (*sweep) {
            cfg.format = flags.format == "json" ? OutputFormat::json : OutputFormat::csv;
            const SweepSpec spec = cfg.sweep_spec();
            const SweepResult result = run_sweep(spec);
            const auto dest = resolve_out(flags.out, cfg.format == OutputFormat::json ? "sweep.json" : "sweep.csv");
            emit(dest, out, [&](std::ostream& s) {
                if (cfg.format == OutputFormat::json) {
                    write_sweep_json(result, s);
                } else {
                    write_sweep_csv(result, s);
                }
            });
            err << "a_old = " << std::setprecision(6) << spec.params.tech.a_old << '\n'
                << "transition onset: a_auto = " << describe(result.transition_onset) << '\n'
                << "displacement complete: a_auto = " << describe(result.displacement_complete) << '\n'
                << "production drop: " << std::fixed << std::setprecision(1) << 100.0 * result.drop_fraction
                << "% (f_pre = " << std::setprecision(3) << result.f_pre << ", f_min = " << result.f_min << ")\n"
                << std::defaultfloat << "recovery: a_auto = " << describe(result.recovery_a_auto) << '\n';
            if (cfg.charts) {
                ChartInputs inputs{result,
                                   make_profit_curves(spec.params, cfg.profit_curve_a_auto, 2001, cfg.solver()),
                                   spec.params.prefs};
                for (const auto& path : emit_charts(inputs, dest.chart_dir)) err << "wrote " << path.string() << '\n';
            }
            return kExitOk;
        }

        // calibrate
        cfg.format = flags.format == "csv" ? OutputFormat::csv : OutputFormat::json;
        if (flags.charts) err << "note: --charts only applies to equilibrium and sweep\n";
        const double target = target_mpk.value_or(cfg.calibrate_mpk);
        const EconomyParams base = cfg.economy(1.0);
        const double a_old = calibrate_a_old(target, base, 1e-12, cfg.solver());
        const EconomyParams calibrated = base.with_a_old(a_old);
        const EquilibriumPoint point = maximize_profit(calibrated, cfg.solver());
        const double mpk = marginal_product_capital_old(calibrated.k_bar, point.l_star, calibrated.tech);
        const auto dest = resolve_out(flags.out, cfg.format == OutputFormat::json ? "calibration.json"
                                                                                  : "calibration.csv");
        emit(dest, out, [&](std::ostream& s) {
            if (cfg.format == OutputFormat::json) {
                s << "{\n  \"a_old\": " << format_number(a_old) << ",\n  \"l_star\": " << format_number(point.l_star)
                  << ",\n  \"mpk\": " << format_number(mpk) << "\n}\n";
            } else {
                s << "a_old,l_star,mpk\n"
                  << format_number(a_old) << ',' << format_number(point.l_star) << ',' << format_number(mpk) << '\n';
            }
        });
        err << "a_old = " << std::setprecision(6) << a_old << " gives L* = " << point.l_star << ", MPK = " << mpk
            << '\n';
        return kExitOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const CalibrationError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const BracketError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

}  // namespace autoeq::cli
