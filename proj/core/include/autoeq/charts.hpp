#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "autoeq/model.hpp"
#include "autoeq/solver.hpp"
#include "autoeq/sweep.hpp"

namespace autoeq {

/// Pi(L) samples at one a_auto together with the solved optimum.
struct ProfitCurve {
    double a_auto = 0.0;
    std::vector<ProfitSample> samples;
    EquilibriumPoint optimum;
};

std::vector<ProfitCurve> make_profit_curves(const EconomyParams& params, const std::vector<double>& a_autos,
                                            int n_points = 2001, const SolverConfig& solver = {});

enum class SweepPanel { production, capital_allocation, profit, labor };

struct ChartInputs {
    SweepResult sweep;
    std::vector<ProfitCurve> curves;
    HouseholdPrefs prefs;
};

std::string render_labor_supply_svg(const HouseholdPrefs& prefs);
std::string render_profit_landscape_svg(const std::vector<ProfitCurve>& curves);
std::string render_sweep_panel_svg(const SweepResult& result, SweepPanel panel);

/// File names written by emit_charts, in order.
std::vector<std::string> chart_file_names();

/// Writes every chart as a standalone SVG into `directory` (created if
/// missing). Returns the written paths. Throws std::filesystem::filesystem_error
/// or std::ios_base::failure on I/O errors.
std::vector<std::filesystem::path> emit_charts(const ChartInputs& inputs, const std::filesystem::path& directory);

}  // namespace autoeq
