// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "autoeq/charts.hpp"
#include "autoeq/config.hpp"
#include "autoeq/report.hpp"
#include "autoeq/sweep.hpp"
#include "oracles.hpp"

using namespace autoeq;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

EconomyParams calibrated_economy() {
    const EconomyParams base = reference_economy(1.0);
    return base.with_a_old(calibrate_a_old(1.0, base));
}

SweepSpec reference_spec(unsigned threads = 1) {
    SweepSpec spec;
    spec.a_min = 0.0;
    spec.a_max = 2.0;
    spec.steps = 201;
    spec.params = calibrated_economy();
    spec.threads = threads;
    return spec;
}

const SweepResult& reference_sweep() {
    static const SweepResult result = run_sweep(reference_spec());
    return result;
}

Verdict calibration() {
    const auto params = calibrated_economy();
    const auto eq = maximize_profit(params);
    const double a_old = params.tech.a_old;
    const bool ok = a_old >= 2.90 && a_old <= 3.10 && eq.l_star >= 18.0 && eq.l_star <= 22.0;
    return {ok, fmt("a_old = %.6f in [2.90, 3.10], l_star(a_auto=0) = %.4f in [18, 22]", a_old, eq.l_star)};
}

Verdict onset() {
    const auto& r = reference_sweep();
    if (!r.transition_onset) return {false, "no onset found"};
    const double v = *r.transition_onset;
    return {std::abs(v - 1.0) <= 0.02, fmt("transition_onset = %.6f, |x - 1| <= 0.02", v)};
}

Verdict displacement() {
    const auto& r = reference_sweep();
    if (!r.displacement_complete) return {false, "no displacement found"};
    const double v = *r.displacement_complete;
    return {v >= 1.15 && v <= 1.25, fmt("displacement_complete = %.6f in [1.15, 1.25]", v)};
}

Verdict drop() {
    const double v = reference_sweep().drop_fraction;
    return {v >= 0.35 && v <= 0.42, fmt("drop_fraction = %.4f in [0.35, 0.42]", v)};
}

Verdict recovery() {
    const auto& r = reference_sweep();
    if (!r.recovery_a_auto) return {false, "no recovery found"};
    const double k_bar = reference_spec().params.k_bar;
    const double expected = r.f_pre / k_bar;
    bool exceeds = true;
    double worst = INFINITY;
    for (const auto& p : r.points) {
        if (p.a_auto > *r.recovery_a_auto) {
            exceeds = exceeds && p.f_star > r.f_pre;
            worst = std::min(worst, p.f_star - r.f_pre);
        }
    }
    // Beyond the sweep range as well.
    const auto params = reference_spec().params;
    for (int i = 1; i <= 200; ++i) {
        const auto eq = maximize_profit(params.with_a_auto(*r.recovery_a_auto + 0.005 * i));
        exceeds = exceeds && eq.f_star > r.f_pre;
        worst = std::min(worst, eq.f_star - r.f_pre);
    }
    const bool ok = std::abs(*r.recovery_a_auto - expected) <= 0.01 && exceeds;
    return {ok, fmt("recovery_a_auto = %.6f vs f_pre/k_bar = %.6f (f_pre = %.4f); min f* - f_pre beyond = %.3g",
                    *r.recovery_a_auto, expected, r.f_pre, worst)};
}

Verdict oracle_equivalence() {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> alpha_d(0.2, 0.8), scale_d(0.0, 3.0), wmin_d(0.5, 5.0);
    double worst_rel = 0.0;
    double worst_l = 0.0;
    for (int i = 0; i < 100; ++i) {
        EconomyParams params;
        params.tech = {alpha_d(rng), kQuotedAold, 0.0};
        params.prefs = HouseholdPrefs::from_wmin(wmin_d(rng), kReferenceGamma, kReferenceLmax, SupplyRegime::positive);
        params.k_bar = kReferenceKbar;
        const double scale = scale_d(rng);
        const auto base = maximize_profit(params);
        params.tech.a_auto = scale * marginal_product_capital_old(params.k_bar, base.l_star, params.tech);

        const auto solved = maximize_profit(params);
        const auto grid = brute_force_equilibrium(params, 1'000'000);
        worst_rel = std::max(worst_rel, std::abs(solved.profit - grid.profit) /
                                            std::max(std::abs(grid.profit), 1e-300));
        worst_l = std::max(worst_l, std::abs(solved.l_star - grid.l_star));
    }
    return {worst_rel <= 1e-9 && worst_l <= 1e-3,
            fmt("100 draws: max rel profit gap = %.3g (<= 1e-9), max |dL| = %.3g (<= 1e-3)", worst_rel, worst_l)};
}

Verdict closed_form_oracles() {
    std::mt19937_64 rng(777);
    // Capital split vs grid maximization of the allocation problem.
    double worst_split = 0.0;
    {
        std::uniform_real_distribution<double> k_d(1.0, 100.0), l_d(0.5, 100.0), alpha_d(0.2, 0.8), aold_d(0.5, 5.0),
            aauto_d(0.0, 3.0);
        for (int i = 0; i < 200; ++i) {
            const double k = k_d(rng), l = l_d(rng);
            const TechnologyParams t{alpha_d(rng), aold_d(rng), aauto_d(rng)};
            const double grid = oracle::grid_production(k, l, t.alpha, t.a_old, t.a_auto, 100'000);
            worst_split = std::max(worst_split, std::abs(total_production(k, l, t) - grid) / grid);
        }
    }
    // Household closed form vs utility grid argmax.
    bool household_ok = true;
    double worst_household = 0.0;
    {
        std::uniform_real_distribution<double> gamma_d(0.1, 0.9), wmin_d(0.5, 5.0), lmax_d(50.0, 800.0),
            markup_d(0.5, 10.0);
        for (int i = 0; i < 100; ++i) {
            const auto p = HouseholdPrefs::from_wmin(wmin_d(rng), gamma_d(rng), lmax_d(rng), SupplyRegime::positive);
            const double w = p.w_min() * markup_d(rng);
            double spacing = 0.0;
            const double grid = oracle::grid_household_labor(w, p.gamma, p.c0, p.l_max, 200'000, &spacing);
            const double gap = std::abs(household_labor_response(w, p) - grid);
            household_ok = household_ok && gap <= spacing;
            worst_household = std::max(worst_household, gap / spacing);
        }
    }
    // Analytic MPK and dPi/dL vs central differences.
    double worst_mpk = 0.0;
    double worst_grad = 0.0;
    {
        std::uniform_real_distribution<double> alpha_d(0.2, 0.8), aold_d(1.0, 5.0), aauto_d(0.0, 3.0),
            wmin_d(0.5, 5.0), frac_d(0.01, 0.9), pos(1.0, 100.0);
        for (int i = 0; i < 200; ++i) {
            const TechnologyParams t{alpha_d(rng), aold_d(rng), 0.0};
            const double k = pos(rng), l = pos(rng);
            const double fd = oracle::central_difference(
                [&](double kk) { return old_technology_output(kk, l, t); }, k, 1e-4 * k);
            const double mpk = marginal_product_capital_old(k, l, t);
            worst_mpk = std::max(worst_mpk, std::abs(mpk - fd) / std::abs(mpk));

            EconomyParams params;
            params.tech = {alpha_d(rng), aold_d(rng), aauto_d(rng)};
            params.prefs = HouseholdPrefs::from_wmin(wmin_d(rng), 0.5, 500.0, SupplyRegime::positive);
            params.k_bar = 50.0;
            const double labor = frac_d(rng) * params.prefs.singular_labor();
            if (params.tech.a_auto > 0.0) {
                const double ratio = std::pow(params.tech.alpha * params.tech.a_old / params.tech.a_auto,
                                              1.0 / (1.0 - params.tech.alpha));
                if (std::abs(labor - params.k_bar / ratio) < 1e-3 * std::max(1.0, params.k_bar / ratio)) continue;
            }
            const double grad_fd =
                oracle::central_difference([&](double x) { return profit(x, params); }, labor, 1e-5 * labor);
            const double grad = profit_gradient(labor, params);
            worst_grad = std::max(worst_grad, std::abs(grad - grad_fd) / std::max(std::abs(grad), 1.0));
        }
    }
    const bool ok = worst_split <= 1e-6 && household_ok && worst_mpk <= 1e-5 && worst_grad <= 1e-5;
    return {ok, fmt("split rel = %.3g (<= 1e-6); household max gap = %.3g grid steps (<= 1); mpk rel = %.3g, "
                    "dPi/dL rel = %.3g (<= 1e-5)",
                    worst_split, worst_household, worst_mpk, worst_grad)};
}

Verdict property_suite() {
    const auto& r = reference_sweep();
    const auto& pts = r.points;
    const double k_bar = reference_spec().params.k_bar;
    bool profit_monotone = true;
    bool share_monotone = true;
    bool linear_after = true;
    bool accounting = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const double share = p.split.k_auto / k_bar;
        if (i > 0) {
            profit_monotone = profit_monotone && p.profit >= pts[i - 1].profit;
            share_monotone = share_monotone && share >= pts[i - 1].split.k_auto / k_bar;
        }
        if (r.displacement_complete && p.a_auto >= *r.displacement_complete) {
            linear_after = linear_after && oracle::rel_close(p.f_star, p.a_auto * k_bar, 1e-12) && share == 1.0;
        }
        accounting = accounting && oracle::rel_close(p.profit, p.f_star - p.wage * p.l_star, 1e-9);
    }
    share_monotone = share_monotone && pts.front().split.k_auto == 0.0 && pts.back().split.k_auto == k_bar;
    const bool ok = profit_monotone && share_monotone && linear_after && accounting;
    return {ok, fmt("profit non-decreasing: %s; automation share 0 -> 1 monotone: %s; f* = a_auto k_bar after "
                    "displacement: %s; accounting identity: %s",
                    profit_monotone ? "yes" : "no", share_monotone ? "yes" : "no", linear_after ? "yes" : "no",
                    accounting ? "yes" : "no")};
}

std::string render_all(const SweepResult& result, const EconomyParams& params) {
    std::ostringstream out;
    write_sweep_csv(result, out);
    const auto curves = make_profit_curves(params, RunConfig{}.profit_curve_a_auto);
    out << render_labor_supply_svg(params.prefs) << render_profit_landscape_svg(curves);
    for (auto panel : {SweepPanel::production, SweepPanel::capital_allocation, SweepPanel::profit, SweepPanel::labor}) {
        out << render_sweep_panel_svg(result, panel);
    }
    return out.str();
}

Verdict determinism() {
    const auto spec = reference_spec();
    const std::string first = render_all(run_sweep(spec), spec.params);
    const std::string second = render_all(run_sweep(spec), spec.params);
    const std::string parallel = render_all(run_sweep(reference_spec(4)), spec.params);
    const bool ok = first == second && first == parallel;
    return {ok, fmt("CSV+SVG bytes (%zu) identical across serial runs: %s, with 4 threads: %s", first.size(),
                    first == second ? "yes" : "no", first == parallel ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"1 calibration", calibration},
        {"2 transition onset", onset},
        {"3 full displacement", displacement},
        {"4 production drop", drop},
        {"5 recovery", recovery},
        {"6 oracle equivalence", oracle_equivalence},
        {"7 closed-form oracles", closed_form_oracles},
        {"8 property suite", property_suite},
        {"9 determinism", determinism},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v{false, ""};
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %-24s %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
        failures += v.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
