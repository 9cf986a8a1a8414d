#pragma once

#include <optional>
#include <vector>

#include "autoeq/model.hpp"
#include "autoeq/solver.hpp"

namespace autoeq {

/// Comparative statics over a_auto. params.tech.a_auto is ignored.
struct SweepSpec {
    double a_min = 0.0;
    double a_max = 2.0;
    int steps = 201;
    EconomyParams params;
    SolverConfig solver;
    double transition_tolerance = 1e-9;  // bisection tolerance on a_auto
    /// Worker threads for the per-point solves; 0 = hardware concurrency.
    unsigned threads = 1;

    void validate() const;
};

struct SweepResult {
    std::vector<EquilibriumPoint> points;  // a_auto ascending
    std::optional<double> transition_onset;
    std::optional<double> displacement_complete;
    double f_pre = 0.0;
    double f_min = 0.0;
    double drop_fraction = 0.0;
    std::optional<double> recovery_a_auto;
};

/// Labor drop below this amount (absolute) relative to the a_min plateau
/// marks the onset of the transition.
inline constexpr double kOnsetLaborTolerance = 1e-3;

/// Which threshold refine_transition() locates.
struct TransitionPredicate {
    enum class Kind { onset, displacement };

    Kind kind = Kind::displacement;
    std::optional<double> reference_labor;  // onset only; defaults to l_star at the bracket's lower end

    static TransitionPredicate displacement() { return {Kind::displacement, std::nullopt}; }
    static TransitionPredicate onset(std::optional<double> reference = std::nullopt) {
        return {Kind::onset, reference};
    }
};

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

SweepResult run_sweep(const SweepSpec& spec);

/// Bisection on a_auto for the first value at which the predicate holds.
/// Returns the upper end of the final bracket. Throws BracketError when the
/// predicate has the same value at both ends.
double refine_transition(const EconomyParams& params, Bracket bracket, const SolverConfig& solver, double tol,
                         TransitionPredicate predicate = TransitionPredicate::displacement());

/// a_old such that the old technology's marginal product of capital at the
/// a_auto = 0 equilibrium equals `target_mpk`. params.tech.a_old and a_auto
/// are ignored. Searches [1e-3, 1e3].
double calibrate_a_old(double target_mpk, const EconomyParams& params, double tol = 1e-12,
                       const SolverConfig& solver = {});

}  // namespace autoeq
