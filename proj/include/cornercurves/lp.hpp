#pragma once

#include <vector>

#include "cornercurves/discrete.hpp"
#include "cornercurves/geometry.hpp"

namespace cornercurves {

/// Equality-constrained linear program over bounded-below variables:
/// maximize objective . x subject to eq_matrix x = eq_rhs and
/// x >= lower_bounds (all zeros when left empty).
struct LpStandardForm {
    std::vector<double> objective;
    std::vector<std::vector<double>> eq_matrix;
    std::vector<double> eq_rhs;
    std::vector<double> lower_bounds;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;  // empty unless Optimal
    double objective_value = 0.0;
    int iterations = 0;
};

/// Two-phase primal simplex on a dense tableau, Bland's anti-cycling rule
/// throughout. Infeasible when the phase-1 optimum stays above 1e-9;
/// unbounded when an improving column has no positive ratio. Throws
/// NumericalBreakdown when every candidate pivot falls below 1e-11.
LpSolution solve_lp(const LpStandardForm& problem);

/// Equal-angle chain maximizing the smallest radius (epigraph form: maximize
/// t subject to the endpoint system and R_k >= t). Minimizing the maximum
/// curvature is the same problem. Throws DiscreteInfeasible when no
/// nonnegative radius vector satisfies the endpoint system.
DiscreteArcChain solve_maxmin(const ProblemInstance& inst, int p);

/// Shortest equal-angle chain whose radii all stay above r_min; with r_min
/// taken from a max-min solution this is the discrete analogue of the
/// bounded-curvature geodesic.
DiscreteArcChain solve_minlength(const ProblemInstance& inst, int p, double r_min);

}  // namespace cornercurves
