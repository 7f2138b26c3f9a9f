#include "cornercurves/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cornercurves {

namespace {

constexpr double kCostTol = 1e-9;    // reduced-cost threshold for entering
constexpr double kPivotTol = 1e-11;  // smallest admissible pivot magnitude
constexpr double kPhase1Tol = 1e-9;  // infeasibility threshold on the phase-1 optimum

// Dense simplex tableau. Constraint rows first, then the objective row and,
// during phase 1, the auxiliary-objective row. Artificial columns sit after
// the structural ones and may leave the basis but never re-enter.
class Tableau {
public:
    Tableau(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
            const std::vector<double>& cost)
        : m_(static_cast<int>(b.size())), n_(static_cast<int>(cost.size())) {
        cols_ = n_ + m_ + 1;  // structural + artificial + rhs
        rows_.assign(static_cast<size_t>(m_ + 2), std::vector<double>(cols_, 0.0));
        basis_.assign(static_cast<size_t>(m_), -1);

        for (int i = 0; i < m_; ++i) {
            const double sign = b[i] < 0.0 ? -1.0 : 1.0;
            for (int j = 0; j < n_; ++j) rows_[i][j] = sign * a[i][j];
            rows_[i][rhs()] = sign * b[i];
        }

        // Crash basis: structural columns that already form exact unit
        // vectors cover their rows without an artificial.
        std::vector<bool> used_col(static_cast<size_t>(n_), false);
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (used_col[static_cast<size_t>(j)] || rows_[i][j] != 1.0) continue;
                bool unit = true;
                for (int r = 0; r < m_ && unit; ++r)
                    if (r != i && rows_[r][j] != 0.0) unit = false;
                if (unit) {
                    basis_[static_cast<size_t>(i)] = j;
                    used_col[static_cast<size_t>(j)] = true;
                    break;
                }
            }
        }
        for (int i = 0; i < m_; ++i) {
            if (basis_[static_cast<size_t>(i)] >= 0) continue;
            const int art = n_ + i;
            rows_[i][art] = 1.0;
            basis_[static_cast<size_t>(i)] = art;
            rows_[phase1_row()][art] = 1.0;  // w + sum of artificials = 0
        }

        for (int j = 0; j < n_; ++j) rows_[obj_row()][j] = -cost[j];

        // Price out the initial basis so basic reduced costs are zero.
        for (int i = 0; i < m_; ++i) {
            const int jb = basis_[static_cast<size_t>(i)];
            for (int row : {obj_row(), phase1_row()}) {
                const double factor = rows_[row][jb];
                if (factor != 0.0)
                    for (int j = 0; j < cols_; ++j) rows_[row][j] -= factor * rows_[i][j];
            }
        }
    }

    int rhs() const { return cols_ - 1; }
    int obj_row() const { return m_; }
    int phase1_row() const { return m_ + 1; }
    bool has_artificials() const {
        for (int i = 0; i < m_; ++i)
            if (basis_[static_cast<size_t>(i)] >= n_) return true;
        return false;
    }

    // After a successful phase 1, pivot zero-valued artificials out of the
    // basis; a row with no usable structural entry is redundant and dropped.
    // Without this an artificial could drift above zero during phase 2.
    void purge_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[static_cast<size_t>(i)] < n_) continue;
            int jc = -1;
            double best = kPivotTol;
            for (int j = 0; j < n_; ++j) {
                if (std::abs(rows_[i][j]) > best) {
                    best = std::abs(rows_[i][j]);
                    jc = j;
                }
            }
            if (jc >= 0) {
                // Degenerate pivot: the row value is zero up to the phase-1
                // tolerance, so the entry sign does not matter. Shave any
                // resulting sign noise off the rhs.
                pivot(i, jc);
                double& b = rows_[static_cast<size_t>(i)][static_cast<size_t>(rhs())];
                if (b < 0.0 && b > -1e-7) b = 0.0;
            } else {
                rows_.erase(rows_.begin() + i);
                basis_.erase(basis_.begin() + i);
                --m_;
                --i;
            }
        }
    }

    // Runs Bland's rule against the given cost row until no structural column
    // improves. Returns false on an unbounded ray.
    bool iterate(int cost_row, int* iterations) {
        const int iter_cap = 200 * (m_ + n_) + 10000;
        for (;;) {
            if (*iterations > iter_cap)
                throw Error(Errc::NumericalBreakdown, "simplex iteration limit exceeded");

            int enter = -1;
            bool tiny_pivot_only = false;
            int leave = -1;
            for (int j = 0; j < n_; ++j) {
                if (rows_[cost_row][j] >= -kCostTol) continue;
                // Candidate entering column under Bland: smallest index, but
                // skipped when every positive entry is numerically unusable.
                const int r = ratio_row(j, &tiny_pivot_only);
                if (r == -2) continue;  // tiny pivots only; try the next column
                enter = j;
                leave = r;
                break;
            }
            if (enter < 0) {
                if (tiny_pivot_only)
                    throw Error(Errc::NumericalBreakdown,
                                "pivot magnitude below tolerance with no alternative");
                return true;  // optimal for this cost row
            }
            if (leave < 0) return false;  // unbounded
            pivot(leave, enter);
            ++*iterations;
        }
    }

    void pivot(int r, int jc) {
        const double inv = 1.0 / rows_[r][jc];
        for (int j = 0; j < cols_; ++j) rows_[r][j] *= inv;
        rows_[r][jc] = 1.0;
        for (int i = 0; i < m_ + 2; ++i) {
            if (i == r) continue;
            const double factor = rows_[i][jc];
            if (factor == 0.0) continue;
            for (int j = 0; j < cols_; ++j) rows_[i][j] -= factor * rows_[r][j];
            rows_[i][jc] = 0.0;
        }
        basis_[static_cast<size_t>(r)] = jc;
    }

    // Leaving row for column jc: minimum ratio, ties by smallest basis index.
    // Returns -1 when no positive entry exists (ray), -2 when positive
    // entries exist but all are below the pivot tolerance.
    int ratio_row(int jc, bool* tiny_pivot_only) const {
        int best = -1;
        double best_ratio = 0.0;
        bool saw_tiny = false;
        for (int i = 0; i < m_; ++i) {
            const double e = rows_[i][jc];
            if (e <= 0.0) continue;
            if (e < kPivotTol) {
                saw_tiny = true;
                continue;
            }
            const double ratio = rows_[i][rhs()] / e;
            if (best < 0 || ratio < best_ratio - 1e-12 * (1.0 + std::abs(best_ratio))) {
                best = i;
                best_ratio = ratio;
            } else if (ratio <= best_ratio + 1e-12 * (1.0 + std::abs(best_ratio)) &&
                       basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(best)]) {
                best = i;
            }
        }
        if (best < 0) {
            if (saw_tiny) {
                *tiny_pivot_only = true;
                return -2;
            }
            return -1;
        }
        return best;
    }

    double objective_value() const { return rows_[obj_row()][rhs()]; }
    double phase1_value() const { return rows_[phase1_row()][rhs()]; }

    std::vector<double> basic_solution() const {
        std::vector<double> x(static_cast<size_t>(n_), 0.0);
        for (int i = 0; i < m_; ++i) {
            const int jb = basis_[static_cast<size_t>(i)];
            if (jb < n_) x[static_cast<size_t>(jb)] = rows_[i][rhs()];
        }
        return x;
    }

private:
    int m_, n_, cols_;
    std::vector<std::vector<double>> rows_;
    std::vector<int> basis_;
};

}  // namespace

LpSolution solve_lp(const LpStandardForm& problem) {
    const int m = static_cast<int>(problem.eq_matrix.size());
    const int n = static_cast<int>(problem.objective.size());
    if (n <= 0 || m > n)
        throw Error(Errc::InvalidArgument, "standard form requires 0 < m <= n");
    if (static_cast<int>(problem.eq_rhs.size()) != m)
        throw Error(Errc::InvalidArgument, "rhs size does not match the row count");
    if (!problem.lower_bounds.empty() &&
        static_cast<int>(problem.lower_bounds.size()) != n)
        throw Error(Errc::InvalidArgument, "lower_bounds size does not match the column count");
    for (const auto& row : problem.eq_matrix)
        if (static_cast<int>(row.size()) != n)
            throw Error(Errc::InvalidArgument, "ragged constraint matrix");
    auto finite = [](double v) { return std::isfinite(v); };
    for (const auto& row : problem.eq_matrix)
        if (!std::all_of(row.begin(), row.end(), finite))
            throw Error(Errc::InvalidArgument, "non-finite entry in the constraint matrix");
    if (!std::all_of(problem.objective.begin(), problem.objective.end(), finite) ||
        !std::all_of(problem.eq_rhs.begin(), problem.eq_rhs.end(), finite) ||
        !std::all_of(problem.lower_bounds.begin(), problem.lower_bounds.end(), finite))
        throw Error(Errc::InvalidArgument, "non-finite entry in the problem data");

    // Shift x' = x - lb so every variable is simply nonnegative.
    std::vector<double> rhs = problem.eq_rhs;
    double objective_offset = 0.0;
    if (!problem.lower_bounds.empty()) {
        for (int i = 0; i < m; ++i) {
            double shift = 0.0;
            for (int j = 0; j < n; ++j)
                shift += problem.eq_matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                         problem.lower_bounds[static_cast<size_t>(j)];
            rhs[static_cast<size_t>(i)] -= shift;
        }
        for (int j = 0; j < n; ++j)
            objective_offset += problem.objective[static_cast<size_t>(j)] *
                                problem.lower_bounds[static_cast<size_t>(j)];
    }

    Tableau tab(problem.eq_matrix, rhs, problem.objective);
    LpSolution sol;
    sol.iterations = 0;

    if (tab.has_artificials()) {
        if (!tab.iterate(tab.phase1_row(), &sol.iterations))
            throw Error(Errc::NumericalBreakdown, "phase-1 objective reported unbounded");
        // Phase-1 maximizes -sum(artificials); its optimum must reach zero.
        if (tab.phase1_value() < -kPhase1Tol) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        tab.purge_artificials();
    }

    if (!tab.iterate(tab.obj_row(), &sol.iterations)) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.x = tab.basic_solution();
    if (!problem.lower_bounds.empty())
        for (int j = 0; j < n; ++j)
            sol.x[static_cast<size_t>(j)] += problem.lower_bounds[static_cast<size_t>(j)];
    sol.objective_value = tab.objective_value() + objective_offset;
    return sol;
}

DiscreteArcChain solve_maxmin(const ProblemInstance& inst, int p) {
    if (p < 2) throw Error(Errc::InvalidArgument, "max-min problem needs p >= 2");
    const EndpointSystem sys = assemble_endpoint_system(inst, p);

    // Variables: radii R_0..R_{p-1}, the floor t, slacks s_k for R_k - t >= 0
    // written as -R_k + t + s_k = 0 so the slack columns seed the basis.
    const int n = 2 * p + 1;
    const int m = 2 + p;
    LpStandardForm lp;
    lp.objective.assign(static_cast<size_t>(n), 0.0);
    lp.objective[static_cast<size_t>(p)] = 1.0;  // maximize t
    lp.eq_matrix.assign(static_cast<size_t>(m), std::vector<double>(static_cast<size_t>(n), 0.0));
    lp.eq_rhs.assign(static_cast<size_t>(m), 0.0);
    for (int k = 0; k < p; ++k) {
        lp.eq_matrix[0][static_cast<size_t>(k)] = sys.row_re[static_cast<size_t>(k)];
        lp.eq_matrix[1][static_cast<size_t>(k)] = sys.row_im[static_cast<size_t>(k)];
        auto& row = lp.eq_matrix[static_cast<size_t>(2 + k)];
        row[static_cast<size_t>(k)] = -1.0;
        row[static_cast<size_t>(p)] = 1.0;
        row[static_cast<size_t>(p + 1 + k)] = 1.0;
    }
    lp.eq_rhs[0] = sys.rhs_re;
    lp.eq_rhs[1] = sys.rhs_im;

    const LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::Infeasible)
        throw Error(Errc::DiscreteInfeasible,
                    "no nonnegative radius vector satisfies the endpoint system for p=" +
                        std::to_string(p));
    if (sol.status != LpStatus::Optimal)
        throw Error(Errc::NumericalBreakdown, "max-min LP did not reach an optimum");

    std::vector<double> radii(sol.x.begin(), sol.x.begin() + p);
    for (double& r : radii) r = std::max(r, 0.0);  // shave solver noise at the bound
    return make_chain(inst, std::move(radii));
}

DiscreteArcChain solve_minlength(const ProblemInstance& inst, int p, double r_min) {
    if (p < 2) throw Error(Errc::InvalidArgument, "min-length problem needs p >= 2");
    if (!(r_min >= 0.0))
        throw Error(Errc::InvalidArgument, "radius floor must be nonnegative");
    const EndpointSystem sys = assemble_endpoint_system(inst, p);

    LpStandardForm lp;
    lp.objective.assign(static_cast<size_t>(p), -1.0);  // maximize -sum R_k
    lp.eq_matrix = {std::vector<double>(sys.row_re.begin(), sys.row_re.end()),
                    std::vector<double>(sys.row_im.begin(), sys.row_im.end())};
    lp.eq_rhs = {sys.rhs_re, sys.rhs_im};
    lp.lower_bounds.assign(static_cast<size_t>(p), r_min);

    const LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::Infeasible)
        throw Error(Errc::DiscreteInfeasible,
                    "no radius vector above the floor satisfies the endpoint system");
    if (sol.status != LpStatus::Optimal)
        throw Error(Errc::NumericalBreakdown, "min-length LP did not reach an optimum");

    std::vector<double> radii = sol.x;
    for (double& r : radii) r = std::max(r, 0.0);
    return make_chain(inst, std::move(radii));
}

}  // namespace cornercurves
