#include "autoeq/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "autoeq/errors.hpp"

namespace autoeq {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

std::string num(double v) { return std::to_string(v); }

}  // namespace

void TechnologyParams::validate() const {
    require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
    require(a_old > 0.0, "a_old must be positive");
    require(a_auto >= 0.0, "a_auto must be non-negative");
}

HouseholdPrefs HouseholdPrefs::from_wmin(double w_min, double gamma, double l_max, SupplyRegime regime) {
    HouseholdPrefs prefs{gamma, c0_from_wmin(w_min, gamma, l_max, regime), l_max};
    prefs.validate();
    return prefs;
}

double HouseholdPrefs::w_min() const { return wmin_from_c0(c0, gamma, l_max); }

void HouseholdPrefs::validate() const {
    require(gamma > 0.0 && gamma < 1.0, "gamma must lie in (0, 1)");
    require(l_max > 0.0, "l_max must be positive");
    require(c0 != 0.0 && std::isfinite(c0), "c0 must be finite and nonzero");
}

void EconomyParams::validate() const {
    tech.validate();
    prefs.validate();
    require(k_bar > 0.0, "k_bar must be positive");
    require(r_bar >= 0.0, "r_bar must be non-negative");
}

EconomyParams reference_economy(double a_old, double a_auto) {
    EconomyParams params;
    params.tech = {kReferenceAlpha, a_old, a_auto};
    params.prefs = HouseholdPrefs::from_wmin(kReferenceWmin, kReferenceGamma, kReferenceLmax, SupplyRegime::positive);
    params.k_bar = kReferenceKbar;
    params.r_bar = 0.0;
    params.validate();
    return params;
}

double c0_from_wmin(double w_min, double gamma, double l_max, SupplyRegime regime) {
    if (!(w_min > 0.0)) throw DomainError("w_min must be positive, got " + num(w_min));
    require(gamma > 0.0 && gamma < 1.0, "gamma must lie in (0, 1)");
    require(l_max > 0.0, "l_max must be positive");
    if (regime == SupplyRegime::positive) return gamma * l_max * w_min / (1.0 - gamma);
    return -w_min * l_max;
}

double wmin_from_c0(double c0, double gamma, double l_max) {
    require(c0 != 0.0, "c0 must be nonzero");
    if (c0 > 0.0) return (1.0 - gamma) / gamma * c0 / l_max;
    return -c0 / l_max;
}

double labor_supply_wage(double labor, const HouseholdPrefs& prefs) {
    const double singular = prefs.singular_labor();
    if (prefs.regime() == SupplyRegime::positive) {
        if (!(labor >= 0.0 && labor < singular)) {
            throw DomainError("labor " + num(labor) + " outside [0, gamma*l_max); supply curve is singular at L = " +
                              num(singular));
        }
    } else if (!(labor > singular && labor < prefs.l_max)) {
        throw DomainError("labor " + num(labor) + " outside (gamma*l_max, l_max) for c0 < 0; singular at L = " +
                          num(singular));
    }
    return (1.0 - prefs.gamma) * prefs.c0 / (singular - labor);
}

double wage_bill(double labor, const HouseholdPrefs& prefs) {
    if (labor == 0.0) return 0.0;
    return labor_supply_wage(labor, prefs) * labor;
}

double household_labor_response(double wage, const HouseholdPrefs& prefs) {
    if (!(wage > 0.0)) throw DomainError("wage must be positive, got " + num(wage));
    const double interior = prefs.singular_labor() - (1.0 - prefs.gamma) * prefs.c0 / wage;
    if (prefs.regime() == SupplyRegime::positive) return std::max(0.0, interior);
    // c0 < 0: below the reservation wage subsistence cannot be met.
    return wage <= prefs.w_min() ? 0.0 : interior;
}

double utility(double consumption, double leisure, const HouseholdPrefs& prefs) {
    const double shifted = consumption + prefs.c0;
    if (!(shifted > 0.0)) throw DomainError("subsistence violated: c + c0 = " + num(shifted) + " <= 0");
    if (!(leisure > 0.0)) throw DomainError("leisure must be positive, got " + num(leisure));
    return std::pow(shifted, prefs.gamma) * std::pow(leisure, 1.0 - prefs.gamma);
}

double old_technology_output(double capital, double labor, const TechnologyParams& tech) {
    if (capital == 0.0 || labor == 0.0) return 0.0;
    return tech.a_old * std::pow(capital, tech.alpha) * std::pow(labor, 1.0 - tech.alpha);
}

CapitalSplit optimal_capital_split(double capital, double labor, const TechnologyParams& tech) {
    double k_old = capital;
    if (tech.a_auto > 0.0) {
        const double ratio = std::pow(tech.alpha * tech.a_old / tech.a_auto, 1.0 / (1.0 - tech.alpha));
        k_old = std::min(labor * ratio, capital);
    }
    return {k_old, capital - k_old};
}

double total_production(double capital, double labor, const TechnologyParams& tech) {
    const CapitalSplit split = optimal_capital_split(capital, labor, tech);
    return old_technology_output(split.k_old, labor, tech) + tech.a_auto * split.k_auto;
}

double marginal_product_capital_old(double capital, double labor, const TechnologyParams& tech) {
    if (!(capital > 0.0 && labor > 0.0)) {
        throw DomainError("marginal product of capital needs K > 0 and L > 0");
    }
    return tech.alpha * tech.a_old * std::pow(labor / capital, 1.0 - tech.alpha);
}

double profit(double labor, const EconomyParams& params) {
    if (labor < 0.0) throw DomainError("labor must be non-negative, got " + num(labor));
    return total_production(params.k_bar, labor, params.tech) - wage_bill(labor, params.prefs) -
           params.r_bar * params.k_bar;
}

double profit_gradient(double labor, const EconomyParams& params) {
    if (!(labor > 0.0)) throw DomainError("profit gradient needs L > 0");
    labor_supply_wage(labor, params.prefs);  // domain check

    const auto& tech = params.tech;
    double capital_per_labor = params.k_bar / labor;
    if (tech.a_auto > 0.0) {
        capital_per_labor =
            std::min(std::pow(tech.alpha * tech.a_old / tech.a_auto, 1.0 / (1.0 - tech.alpha)), capital_per_labor);
    }
    const double marginal_output = (1.0 - tech.alpha) * tech.a_old * std::pow(capital_per_labor, tech.alpha);

    const auto& prefs = params.prefs;
    const double gap = prefs.singular_labor() - labor;
    const double marginal_cost = (1.0 - prefs.gamma) * prefs.c0 * prefs.singular_labor() / (gap * gap);
    return marginal_output - marginal_cost;
}

}  // namespace autoeq
