#include "autoeq/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "autoeq/errors.hpp"

namespace autoeq {

namespace {

double grid_a_auto(const SweepSpec& spec, int i) {
    if (i == spec.steps - 1) return spec.a_max;
    return spec.a_min + (spec.a_max - spec.a_min) * static_cast<double>(i) / static_cast<double>(spec.steps - 1);
}

std::vector<EquilibriumPoint> solve_grid(const SweepSpec& spec) {
    const auto n = static_cast<std::size_t>(spec.steps);
    std::vector<EquilibriumPoint> points(n);
    auto solve_one = [&](std::size_t i) {
        points[i] = maximize_profit(spec.params.with_a_auto(grid_a_auto(spec, static_cast<int>(i))), spec.solver);
    };

    unsigned threads = spec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : spec.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) solve_one(i);
        return points;
    }

    // Each slot is written by exactly one worker, so the result does not
    // depend on scheduling.
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) solve_one(i);
        });
    }
    workers.clear();  // join
    return points;
}

template <class Pred>
double bisect(double lo, double hi, double tol, Pred&& holds) {
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (holds(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace

void SweepSpec::validate() const {
    if (!(a_min >= 0.0)) throw DomainError("a_min must be non-negative");
    if (!(a_max > a_min)) throw DomainError("a_max must exceed a_min");
    if (steps < 2) throw DomainError("steps must be at least 2");
    if (!(transition_tolerance > 0.0)) throw DomainError("transition_tolerance must be positive");
    params.validate();
    solver.validate();
}

double refine_transition(const EconomyParams& params, Bracket bracket, const SolverConfig& solver, double tol,
                         TransitionPredicate predicate) {
    if (!(bracket.hi > bracket.lo)) throw BracketError("bracket must satisfy lo < hi");
    if (!(tol > 0.0)) throw DomainError("bisection tolerance must be positive");

    auto labor_at = [&](double a_auto) { return maximize_profit(params.with_a_auto(a_auto), solver).l_star; };

    double reference = 0.0;
    if (predicate.kind == TransitionPredicate::Kind::onset) {
        reference = predicate.reference_labor.value_or(labor_at(bracket.lo));
    }
    auto holds = [&](double a_auto) {
        const double labor = labor_at(a_auto);
        if (predicate.kind == TransitionPredicate::Kind::displacement) return labor == 0.0;
        return labor < reference - kOnsetLaborTolerance;
    };

    const bool at_lo = holds(bracket.lo);
    const bool at_hi = holds(bracket.hi);
    if (at_lo || !at_hi) {
        throw BracketError("bracket [" + std::to_string(bracket.lo) + ", " + std::to_string(bracket.hi) +
                           "] does not straddle the transition");
    }
    return bisect(bracket.lo, bracket.hi, tol, holds);
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();

    SweepResult result;
    result.points = solve_grid(spec);
    const auto& points = result.points;
    const std::size_t n = points.size();

    const double plateau = points.front().l_star;
    result.f_pre = points.front().f_star;

    for (std::size_t i = 1; i < n; ++i) {
        if (points[i].l_star < plateau - kOnsetLaborTolerance) {
            result.transition_onset =
                refine_transition(spec.params, {points[i - 1].a_auto, points[i].a_auto}, spec.solver,
                                  spec.transition_tolerance, TransitionPredicate::onset(plateau));
            break;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (points[i].l_star != 0.0) continue;
        result.displacement_complete =
            i == 0 ? points[0].a_auto
                   : refine_transition(spec.params, {points[i - 1].a_auto, points[i].a_auto}, spec.solver,
                                       spec.transition_tolerance, TransitionPredicate::displacement());
        break;
    }

    auto lowest = std::min_element(points.begin(), points.end(),
                                   [](const EquilibriumPoint& x, const EquilibriumPoint& y) { return x.f_star < y.f_star; });
    result.f_min = lowest->f_star;
    if (result.displacement_complete) {
        const auto at_threshold = maximize_profit(spec.params.with_a_auto(*result.displacement_complete), spec.solver);
        result.f_min = std::min(result.f_min, at_threshold.f_star);
    }
    result.drop_fraction = result.f_pre > 0.0 ? std::max(0.0, (result.f_pre - result.f_min) / result.f_pre) : 0.0;

    if (result.f_min < result.f_pre) {
        // After full displacement f = a_auto * k_bar exactly.
        const double analytic = result.f_pre / spec.params.k_bar;
        if (result.displacement_complete && analytic >= *result.displacement_complete) {
            result.recovery_a_auto = analytic;
        } else {
            const auto start = static_cast<std::size_t>(lowest - points.begin());
            for (std::size_t j = start + 1; j < n; ++j) {
                if (points[j].f_star < result.f_pre) continue;
                result.recovery_a_auto = bisect(points[j - 1].a_auto, points[j].a_auto, spec.transition_tolerance,
                                                [&](double a_auto) {
                                                    return maximize_profit(spec.params.with_a_auto(a_auto), spec.solver)
                                                               .f_star >= result.f_pre;
                                                });
                break;
            }
        }
    }
    return result;
}

double calibrate_a_old(double target_mpk, const EconomyParams& params, double tol, const SolverConfig& solver) {
    if (!(target_mpk > 0.0)) throw DomainError("target marginal product must be positive");
    if (!(tol > 0.0)) throw DomainError("calibration tolerance must be positive");

    auto excess = [&](double a_old) {
        const EconomyParams candidate = params.with_a_old(a_old).with_a_auto(0.0);
        const EquilibriumPoint eq = maximize_profit(candidate, solver);
        if (eq.l_star == 0.0) return -target_mpk;
        return marginal_product_capital_old(candidate.k_bar, eq.l_star, candidate.tech) - target_mpk;
    };

    double lo = 1e-3;
    double hi = 1e3;
    const double g_lo = excess(lo);
    const double g_hi = excess(hi);
    if ((g_lo > 0.0) == (g_hi > 0.0)) {
        throw CalibrationError("no sign change of MPK - target over a_old in [1e-3, 1e3] for target " +
                               std::to_string(target_mpk));
    }
    const bool rising = g_hi > 0.0;
    while (hi / lo - 1.0 > tol) {
        const double mid = std::sqrt(lo * hi);
        if (mid <= lo || mid >= hi) break;
        if ((excess(mid) > 0.0) == rising) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return std::sqrt(lo * hi);
}

}  // namespace autoeq
