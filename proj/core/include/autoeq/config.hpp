#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autoeq/model.hpp"
#include "autoeq/solver.hpp"
#include "autoeq/sweep.hpp"

namespace autoeq {

enum class OutputFormat { csv, json };

/// Everything a run needs. Economy defaults are the reference economy with
/// a_old calibrated to a marginal product of capital of 1.
struct RunConfig {
    double alpha = kReferenceAlpha;
    double gamma = kReferenceGamma;
    double w_min = kReferenceWmin;
    SupplyRegime c0_regime = SupplyRegime::positive;
    double l_max = kReferenceLmax;
    double k_bar = kReferenceKbar;
    double r_bar = 0.0;
    std::optional<double> a_old;  // when absent, calibrated to calibrate_mpk
    double calibrate_mpk = 1.0;

    double a_min = 0.0;
    double a_max = 2.0;
    int steps = 201;
    int coarse_grid_points = SolverConfig{}.coarse_grid_points;
    double refine_tolerance = SolverConfig{}.refine_tolerance;

    /// a_auto values drawn in the profit-landscape chart.
    std::vector<double> profit_curve_a_auto{0.0, 1.05, 1.1, 1.2};

    // Output options; set from the command line.
    std::optional<std::filesystem::path> out;
    OutputFormat format = OutputFormat::csv;
    bool charts = false;
    unsigned threads = 1;

    SolverConfig solver() const;
    /// Economy with the given a_old. Preferences come from (w_min, c0_regime).
    EconomyParams economy(double a_old, double a_auto = 0.0) const;
    /// Economy with a_old either as configured or calibrated.
    EconomyParams resolved_economy(double a_auto = 0.0) const;
    SweepSpec sweep_spec() const;
};

/// Parses `key = value` lines; `#` starts a comment. Missing keys keep their
/// defaults. Throws ParseError naming the key and line.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace autoeq
