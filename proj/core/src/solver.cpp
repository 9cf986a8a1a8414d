#include "autoeq/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "autoeq/errors.hpp"

namespace autoeq {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
constexpr double kNoiseFloor = 16.0 * std::numeric_limits<double>::epsilon();

struct Candidate {
    double labor;
    double profit;
};

double grid_point(const LaborDomain& domain, int i, int n) {
    if (i == n - 1) return domain.hi;
    return domain.lo + (domain.hi - domain.lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

// Golden-section search for the maximum of a unimodal function on [a, b].
// The bracket endpoints are kept as candidates so a maximum on the boundary
// is returned exactly.
template <class F>
Candidate golden_section_max(F&& f, double a, double b, double tol) {
    const double fa = f(a);
    const double fb = f(b);
    const Candidate best_end = fa >= fb ? Candidate{a, fa} : Candidate{b, fb};

    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        }
    }
    Candidate inner = f1 >= f2 ? Candidate{x1, f1} : Candidate{x2, f2};
    return inner.profit >= best_end.profit ? inner : best_end;
}

}  // namespace

void SolverConfig::validate() const {
    if (coarse_grid_points < 64) throw DomainError("coarse_grid_points must be >= 64");
    if (!(refine_tolerance > 0.0)) throw DomainError("refine_tolerance must be positive");
    if (!(corner_tie_epsilon > 0.0)) throw DomainError("corner_tie_epsilon must be positive");
    if (!(domain_margin > 0.0 && domain_margin < 1.0)) throw DomainError("domain_margin must lie in (0, 1)");
}

LaborDomain labor_search_domain(const HouseholdPrefs& prefs, double domain_margin) {
    const double singular = prefs.singular_labor();
    if (prefs.regime() == SupplyRegime::positive) return {0.0, singular * (1.0 - domain_margin)};
    return {singular * (1.0 + domain_margin), prefs.l_max * (1.0 - domain_margin)};
}

EquilibriumPoint equilibrium_at(double labor, const EconomyParams& params) {
    EquilibriumPoint point;
    point.a_auto = params.tech.a_auto;
    point.l_star = labor;
    point.wage = labor == 0.0 ? 0.0 : labor_supply_wage(labor, params.prefs);
    point.split = optimal_capital_split(params.k_bar, labor, params.tech);
    point.f_star = total_production(params.k_bar, labor, params.tech);
    point.profit = point.f_star - point.wage * labor - params.r_bar * params.k_bar;
    return point;
}

EquilibriumPoint maximize_profit(const EconomyParams& params, const SolverConfig& config) {
    params.validate();
    config.validate();

    const LaborDomain domain = labor_search_domain(params.prefs, config.domain_margin);
    const int n = config.coarse_grid_points;
    auto pi = [&params](double labor) { return profit(labor, params); };

    std::vector<double> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = pi(grid_point(domain, i, n));

    Candidate corner{0.0, pi(0.0)};
    std::vector<Candidate> candidates;
    for (int i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const bool left_ok = i == 0 || values[idx] >= values[idx - 1];
        const bool right_ok = i == n - 1 || values[idx] >= values[idx + 1];
        if (!(left_ok && right_ok)) continue;
        const double a = grid_point(domain, std::max(i - 1, 0), n);
        const double b = grid_point(domain, std::min(i + 1, n - 1), n);
        const Candidate refined = golden_section_max(pi, a, b, config.refine_tolerance);
        if (a == 0.0 || refined.labor < 2.0 * config.refine_tolerance) {
            // Same basin as the corner: no tie preference, and the refinement
            // must clear rounding noise to displace the corner.
            const double noise = kNoiseFloor * std::max(std::abs(corner.profit), 1.0);
            if (refined.profit > corner.profit + noise) corner = refined;
            continue;
        }
        candidates.push_back(refined);
    }
    candidates.push_back(corner);

    // Larger L first so that a smaller-L candidate must win strictly.
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& x, const Candidate& y) { return x.labor > y.labor; });
    Candidate best = candidates.front();
    for (const Candidate& c : candidates) {
        const double margin = config.corner_tie_epsilon * std::max(std::abs(best.profit), 1.0);
        if (c.profit > best.profit + margin) best = c;
    }
    return equilibrium_at(best.labor, params);
}

EquilibriumPoint brute_force_equilibrium(const EconomyParams& params, int grid_points, double domain_margin) {
    params.validate();
    if (grid_points < 1000) throw DomainError("brute force needs at least 1000 grid points");

    const LaborDomain domain = labor_search_domain(params.prefs, domain_margin);
    double best_labor = 0.0;
    double best_profit = profit(0.0, params);
    for (int i = 0; i < grid_points; ++i) {
        const double labor = grid_point(domain, i, grid_points);
        const double value = profit(labor, params);
        if (value >= best_profit) {
            best_profit = value;
            best_labor = labor;
        }
    }
    return equilibrium_at(best_labor, params);
}

std::vector<ProfitSample> profit_curve(const EconomyParams& params, int n_points, double domain_margin) {
    params.validate();
    if (n_points < 2) throw DomainError("profit curve needs at least 2 points");
    const LaborDomain domain = labor_search_domain(params.prefs, domain_margin);
    std::vector<ProfitSample> samples;
    samples.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double labor = grid_point(domain, i, n_points);
        samples.push_back({labor, profit(labor, params)});
    }
    return samples;
}

}  // namespace autoeq
