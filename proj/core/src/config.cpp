#include "autoeq/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "autoeq/errors.hpp"

namespace autoeq {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view value, int line) {
    double out = 0.0;
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end || !std::isfinite(out)) {
        throw ParseError(std::string(key), line, "cannot parse '" + std::string(value) + "' as a number");
    }
    return out;
}

int parse_int(std::string_view key, std::string_view value, int line) {
    int out = 0;
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(std::string(key), line, "cannot parse '" + std::string(value) + "' as an integer");
    }
    return out;
}

void check(bool ok, std::string_view key, int line, const char* what) {
    if (!ok) throw ParseError(std::string(key), line, what);
}

}  // namespace

SolverConfig RunConfig::solver() const {
    SolverConfig cfg;
    cfg.coarse_grid_points = coarse_grid_points;
    cfg.refine_tolerance = refine_tolerance;
    return cfg;
}

EconomyParams RunConfig::economy(double a_old_value, double a_auto) const {
    EconomyParams params;
    params.tech = {alpha, a_old_value, a_auto};
    params.prefs = HouseholdPrefs::from_wmin(w_min, gamma, l_max, c0_regime);
    params.k_bar = k_bar;
    params.r_bar = r_bar;
    params.validate();
    return params;
}

EconomyParams RunConfig::resolved_economy(double a_auto) const {
    if (a_old) return economy(*a_old, a_auto);
    const EconomyParams base = economy(1.0);
    return base.with_a_old(calibrate_a_old(calibrate_mpk, base, 1e-12, solver())).with_a_auto(a_auto);
}

SweepSpec RunConfig::sweep_spec() const {
    SweepSpec spec;
    spec.a_min = a_min;
    spec.a_max = a_max;
    spec.steps = steps;
    spec.params = resolved_economy(a_min);
    spec.solver = solver();
    spec.threads = threads;
    return spec;
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::set<std::string, std::less<>> seen;
    int a_range_line = 0;
    int a_old_line = 0;
    int calibrate_line = 0;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("", line_no, "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        check(!key.empty(), key, line_no, "missing key");
        check(!value.empty(), key, line_no, "missing value");
        if (!seen.insert(std::string(key)).second) throw ParseError(std::string(key), line_no, "duplicate key");

        if (key == "alpha") {
            cfg.alpha = parse_double(key, value, line_no);
            check(cfg.alpha > 0.0 && cfg.alpha < 1.0, key, line_no, "must lie in (0, 1)");
        } else if (key == "gamma") {
            cfg.gamma = parse_double(key, value, line_no);
            check(cfg.gamma > 0.0 && cfg.gamma < 1.0, key, line_no, "must lie in (0, 1)");
        } else if (key == "w_min") {
            cfg.w_min = parse_double(key, value, line_no);
            check(cfg.w_min > 0.0, key, line_no, "must be positive");
        } else if (key == "c0_regime") {
            if (value == "positive") {
                cfg.c0_regime = SupplyRegime::positive;
            } else if (value == "negative") {
                cfg.c0_regime = SupplyRegime::negative;
            } else {
                throw ParseError(std::string(key), line_no, "must be 'positive' or 'negative'");
            }
        } else if (key == "l_max") {
            cfg.l_max = parse_double(key, value, line_no);
            check(cfg.l_max > 0.0, key, line_no, "must be positive");
        } else if (key == "k_bar") {
            cfg.k_bar = parse_double(key, value, line_no);
            check(cfg.k_bar > 0.0, key, line_no, "must be positive");
        } else if (key == "r_bar") {
            cfg.r_bar = parse_double(key, value, line_no);
            check(cfg.r_bar >= 0.0, key, line_no, "must be non-negative");
        } else if (key == "a_old") {
            cfg.a_old = parse_double(key, value, line_no);
            check(*cfg.a_old > 0.0, key, line_no, "must be positive");
            a_old_line = line_no;
        } else if (key == "calibrate_mpk") {
            cfg.calibrate_mpk = parse_double(key, value, line_no);
            check(cfg.calibrate_mpk > 0.0, key, line_no, "must be positive");
            calibrate_line = line_no;
        } else if (key == "a_min") {
            cfg.a_min = parse_double(key, value, line_no);
            check(cfg.a_min >= 0.0, key, line_no, "must be non-negative");
            a_range_line = std::max(a_range_line, line_no);
        } else if (key == "a_max") {
            cfg.a_max = parse_double(key, value, line_no);
            a_range_line = std::max(a_range_line, line_no);
        } else if (key == "steps") {
            cfg.steps = parse_int(key, value, line_no);
            check(cfg.steps >= 2, key, line_no, "must be at least 2");
        } else if (key == "coarse_grid_points") {
            cfg.coarse_grid_points = parse_int(key, value, line_no);
            check(cfg.coarse_grid_points >= 64, key, line_no, "must be at least 64");
        } else if (key == "refine_tolerance") {
            cfg.refine_tolerance = parse_double(key, value, line_no);
            check(cfg.refine_tolerance > 0.0, key, line_no, "must be positive");
        } else if (key == "profit_curve_a_auto") {
            cfg.profit_curve_a_auto.clear();
            std::string_view rest = value;
            while (!rest.empty()) {
                const auto comma = rest.find(',');
                const std::string_view item = trim(rest.substr(0, comma));
                const double a = parse_double(key, item, line_no);
                check(a >= 0.0, key, line_no, "values must be non-negative");
                cfg.profit_curve_a_auto.push_back(a);
                rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            }
        } else {
            throw ParseError(std::string(key), line_no, "unknown key");
        }
    }

    if (a_old_line > 0 && calibrate_line > 0) {
        throw ParseError("calibrate_mpk", std::max(a_old_line, calibrate_line),
                         "a_old and calibrate_mpk are mutually exclusive");
    }
    if (!(cfg.a_max > cfg.a_min)) throw ParseError("a_max", a_range_line, "a_max must exceed a_min");
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("", 0, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace autoeq
