#pragma once

// Closed-form primitives of the monopolist-monopsonist economy with an
// automation technology. Everything here is a pure function of its inputs.
//
// Units: product price is the numeraire, so wages, rents and profits are in
// units of output.

namespace autoeq {

struct TechnologyParams {
    double alpha = 0.5;   // capital exponent of the old technology, in (0,1)
    double a_old = 1.0;   // old-technology productivity
    double a_auto = 0.0;  // automation productivity (output per unit capital)

    void validate() const;
};

enum class SupplyRegime { positive, negative };

/// Household preferences U(c, l) = (c + c0)^gamma * l^(1 - gamma).
///
/// The reservation wage w_min is derived from (gamma, c0, l_max). Use
/// from_wmin() to build preferences from the reservation wage.
struct HouseholdPrefs {
    double gamma = 0.5;
    double c0 = 1.0;
    double l_max = 1.0;

    static HouseholdPrefs from_wmin(double w_min, double gamma, double l_max, SupplyRegime regime);

    SupplyRegime regime() const noexcept { return c0 > 0.0 ? SupplyRegime::positive : SupplyRegime::negative; }
    double w_min() const;
    /// gamma * l_max; the supply curve is singular here.
    double singular_labor() const noexcept { return gamma * l_max; }

    void validate() const;
};

struct EconomyParams {
    TechnologyParams tech;
    HouseholdPrefs prefs;
    double k_bar = 1.0;
    double r_bar = 0.0;

    EconomyParams with_a_auto(double a_auto) const {
        EconomyParams out = *this;
        out.tech.a_auto = a_auto;
        return out;
    }

    EconomyParams with_a_old(double a_old) const {
        EconomyParams out = *this;
        out.tech.a_old = a_old;
        return out;
    }

    void validate() const;
};

struct CapitalSplit {
    double k_old = 0.0;
    double k_auto = 0.0;
};

struct EquilibriumPoint {
    double a_auto = 0.0;
    double l_star = 0.0;
    double wage = 0.0;  // 0 when l_star == 0
    double f_star = 0.0;
    double profit = 0.0;
    CapitalSplit split;
};

// Reference economy: alpha = gamma = 0.5, w_min = 2, K = 50, L_max = 500,
// r = 0, positive c0 regime.
inline constexpr double kReferenceAlpha = 0.5;
inline constexpr double kReferenceGamma = 0.5;
inline constexpr double kReferenceWmin = 2.0;
inline constexpr double kReferenceKbar = 50.0;
inline constexpr double kReferenceLmax = 500.0;
/// The rounded value quoted alongside the reference parameters. The value
/// that actually gives MPK = 1 at a_auto = 0 comes from calibrate_a_old().
inline constexpr double kQuotedAold = 3.01;

EconomyParams reference_economy(double a_old, double a_auto = 0.0);

// ---- households ----------------------------------------------------------

double c0_from_wmin(double w_min, double gamma, double l_max, SupplyRegime regime);
double wmin_from_c0(double c0, double gamma, double l_max);

/// Wage that induces households to supply `labor`:
///   w(L) = (1 - gamma) c0 / (gamma l_max - L).
/// Domain is [0, gamma l_max) for c0 > 0 and (gamma l_max, l_max) for c0 < 0.
double labor_supply_wage(double labor, const HouseholdPrefs& prefs);

/// w(L) * L, defined as 0 at L = 0 regardless of regime.
double wage_bill(double labor, const HouseholdPrefs& prefs);

/// Utility-maximizing labor at wage `wage`; 0 at or below the reservation wage.
double household_labor_response(double wage, const HouseholdPrefs& prefs);

double utility(double consumption, double leisure, const HouseholdPrefs& prefs);

// ---- firm ----------------------------------------------------------------

/// A_old K^alpha L^(1-alpha).
double old_technology_output(double capital, double labor, const TechnologyParams& tech);

/// Output-maximizing allocation of `capital` between the two technologies.
CapitalSplit optimal_capital_split(double capital, double labor, const TechnologyParams& tech);

/// Output under the optimal split.
double total_production(double capital, double labor, const TechnologyParams& tech);

/// d/dK of the old-technology output, alpha A_old (L/K)^(1-alpha).
double marginal_product_capital_old(double capital, double labor, const TechnologyParams& tech);

/// Reduced profit with full capital utilization:
///   Pi(L) = f(k_bar, L) - w(L) L - r_bar k_bar.
double profit(double labor, const EconomyParams& params);

/// Analytic dPi/dL for L > 0. Uses the envelope property of the capital split;
/// at the clamp boundary of the split the clamped branch is used.
double profit_gradient(double labor, const EconomyParams& params);

}  // namespace autoeq
