#pragma once

#include <vector>

#include "autoeq/model.hpp"

namespace autoeq {

struct SolverConfig {
    int coarse_grid_points = 2048;
    double refine_tolerance = 1e-10;    // absolute, on L
    double corner_tie_epsilon = 1e-12;  // relative profit
    double domain_margin = 1e-9;        // fraction trimmed off the singular end

    void validate() const;
};

/// Closed interval of labor the firm can purchase, excluding the L = 0 corner
/// for the c0 < 0 regime (where the supply curve lives above gamma*l_max).
struct LaborDomain {
    double lo = 0.0;
    double hi = 0.0;
};

LaborDomain labor_search_domain(const HouseholdPrefs& prefs, double domain_margin);

/// Global maximizer of Pi(L). Coarse grid over the search domain plus the
/// L = 0 corner, golden-section refinement of every local bracket, best
/// candidate wins. Near-ties resolve toward the larger L.
EquilibriumPoint maximize_profit(const EconomyParams& params, const SolverConfig& config = {});

/// Grid argmax of Pi over `grid_points` uniform points plus the corner.
/// Intended as a validation oracle for maximize_profit.
EquilibriumPoint brute_force_equilibrium(const EconomyParams& params, int grid_points,
                                         double domain_margin = SolverConfig{}.domain_margin);

/// Builds the EquilibriumPoint for a given labor choice.
EquilibriumPoint equilibrium_at(double labor, const EconomyParams& params);

struct ProfitSample {
    double labor = 0.0;
    double profit = 0.0;
};

/// Uniform samples of Pi over the search domain, L ascending.
std::vector<ProfitSample> profit_curve(const EconomyParams& params, int n_points,
                                       double domain_margin = SolverConfig{}.domain_margin);

}  // namespace autoeq
