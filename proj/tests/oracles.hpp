#pragma once

// Test-only reference computations. Nothing here calls into the library's
// closed forms; each oracle re-derives its answer by brute force.

#include <cmath>
#include <cstdint>
#include <random>

namespace oracle {

/// max over a uniform K_old grid (n intervals) of
///   a_old K_old^alpha L^(1-alpha) + a_auto (K - K_old).
inline double grid_production(double capital, double labor, double alpha, double a_old, double a_auto,
                              std::int64_t n) {
    double best = -INFINITY;
    for (std::int64_t i = 0; i <= n; ++i) {
        const double k_old = capital * static_cast<double>(i) / static_cast<double>(n);
        const double value = a_old * std::pow(k_old, alpha) * std::pow(labor, 1.0 - alpha) + a_auto * (capital - k_old);
        best = std::max(best, value);
    }
    return best;
}

/// Argmax over a uniform K_old grid; returns the maximizing K_old.
inline double grid_capital_split(double capital, double labor, double alpha, double a_old, double a_auto,
                                 std::int64_t n) {
    double best = -INFINITY;
    double arg = 0.0;
    for (std::int64_t i = 0; i <= n; ++i) {
        const double k_old = capital * static_cast<double>(i) / static_cast<double>(n);
        const double value = a_old * std::pow(k_old, alpha) * std::pow(labor, 1.0 - alpha) + a_auto * (capital - k_old);
        if (value > best) {
            best = value;
            arg = k_old;
        }
    }
    return arg;
}

/// Labor supplied at wage w, found by maximizing (c + c0)^gamma l^(1-gamma)
/// with c = w (l_max - l) over a uniform leisure grid on (0, l_max].
/// Returns l_max - argmax leisure; `spacing` receives the grid step.
inline double grid_household_labor(double wage, double gamma, double c0, double l_max, std::int64_t n,
                                   double* spacing = nullptr) {
    const double h = l_max / static_cast<double>(n);
    if (spacing) *spacing = h;
    double best = -INFINITY;
    double best_leisure = l_max;
    for (std::int64_t i = 1; i <= n; ++i) {
        const double leisure = h * static_cast<double>(i);
        const double c = wage * (l_max - leisure);
        if (c + c0 <= 0.0) continue;
        const double u = std::pow(c + c0, gamma) * std::pow(leisure, 1.0 - gamma);
        if (u > best) {
            best = u;
            best_leisure = leisure;
        }
    }
    return l_max - best_leisure;
}

template <class F>
double central_difference(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Profit for the c0 > 0 regime written out directly:
/// grid-free because the split maximization is replaced by the dense grid.
inline double grid_profit(double labor, double alpha, double a_old, double a_auto, double k_bar, double w_min,
                          double gamma, double l_max, double r_bar, std::int64_t n) {
    const double wage = labor == 0.0 ? 0.0 : w_min / (1.0 - labor / (gamma * l_max));
    return grid_production(k_bar, labor, alpha, a_old, a_auto, n) - wage * labor - r_bar * k_bar;
}

inline bool rel_close(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace oracle
