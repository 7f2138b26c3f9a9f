#include <doctest.h>

#include <cmath>
#include <string>

#include "cornercurves/lp.hpp"
#include "lp_battery.hpp"
#include "test_helpers.hpp"

using namespace cornercurves;
using testutil::example_instance;

TEST_CASE("battery of hand-solved programs") {
    for (const auto& c : testutil::lp_battery()) {
        CAPTURE(c.name);
        const LpSolution sol = solve_lp(c.lp);
        CHECK(sol.status == c.expected_status);
        if (c.expected_status != LpStatus::Optimal) continue;
        CHECK_NEAR(sol.objective_value, c.expected_value, 1e-9);

        // Solution feasibility: equality residual and bounds.
        const size_t n = c.lp.objective.size();
        REQUIRE(sol.x.size() == n);
        for (size_t i = 0; i < c.lp.eq_matrix.size(); ++i) {
            double acc = -c.lp.eq_rhs[i];
            for (size_t j = 0; j < n; ++j) acc += c.lp.eq_matrix[i][j] * sol.x[j];
            CHECK(std::abs(acc) <= 1e-9 * (1.0 + std::abs(c.lp.eq_rhs[i])));
        }
        for (size_t j = 0; j < n; ++j) {
            const double lb = c.lp.lower_bounds.empty() ? 0.0 : c.lp.lower_bounds[j];
            CHECK(sol.x[j] >= lb - 1e-12);
        }

        // Objective recomputed from x agrees with the reported value.
        double value = 0.0;
        for (size_t j = 0; j < n; ++j) value += c.lp.objective[j] * sol.x[j];
        CHECK(std::abs(value - sol.objective_value) <= 1e-9 * (1.0 + std::abs(value)));
    }
}

TEST_CASE("no cycling on Beale's example") {
    for (const auto& c : testutil::lp_battery()) {
        if (std::string(c.name) != "beale") continue;
        const LpSolution sol = solve_lp(c.lp);
        CHECK(sol.status == LpStatus::Optimal);
        CHECK_NEAR(sol.objective_value, 0.05, 1e-9);
        CHECK(sol.iterations < 100);
    }
}

TEST_CASE("malformed programs are rejected") {
    CHECK_THROWS_AS(solve_lp({{}, {}, {}, {}}), Error);
    // m > n.
    CHECK_THROWS_AS(solve_lp({{1}, {{1}, {1}, {1}}, {0, 0, 0}, {}}), Error);
    // Ragged matrix.
    CHECK_THROWS_AS(solve_lp({{1, 1}, {{1}}, {0}, {}}), Error);
    // Non-finite entry.
    CHECK_THROWS_AS(solve_lp({{1}, {{std::nan("")}}, {0}, {}}), Error);
}

TEST_CASE("max-min chain on the worked corner, small p") {
    const ProblemInstance inst = example_instance();
    const DiscreteArcChain chain = solve_maxmin(inst, 2);
    // p=2 leaves a single feasible point; the optimum is its smaller radius.
    CHECK_NEAR(chain.min_radius(), 0.09502139889455627, 1e-9);
    CHECK(chain.radii[0] > chain.radii[1]);
}

TEST_CASE("max-min optimum scales with the instance") {
    const ProblemInstance base = example_instance();
    const double t_base = solve_maxmin(base, 8).min_radius();
    for (double lambda : {0.5, 2.0, 10.0}) {
        const ProblemInstance scaled =
            normalize_problem(base.a() * lambda, base.b() * lambda, base.alpha(), base.beta(),
                              base.corner() * lambda);
        const double t = solve_maxmin(scaled, 8).min_radius();
        CHECK_NEAR(t, lambda * t_base, 1e-9 * lambda);
    }
}

TEST_CASE("doubling p never hurts the optimum") {
    const ProblemInstance inst = example_instance();
    double prev = solve_maxmin(inst, 2).min_radius();
    for (int p = 4; p <= 256; p *= 2) {
        const double t = solve_maxmin(inst, p).min_radius();
        CHECK(t >= prev - 1e-9);                    // refinement preserves feasibility
        CHECK(t <= testutil::kExampleRa + 1e-6);    // never beats the continuous optimum
        prev = t;
    }
}

TEST_CASE("min-length chain under a radius floor") {
    const ProblemInstance inst = example_instance();
    const DiscreteArcChain maxmin = solve_maxmin(inst, 40);
    const double floor = maxmin.min_radius();
    const DiscreteArcChain shortest = solve_minlength(inst, 40, floor);
    CHECK(shortest.min_radius() >= floor - 1e-9);
    CHECK(shortest.length() <= maxmin.length() + 1e-9);

    const BoundsReport bounds = length_bounds(inst);
    CHECK(shortest.length() >= bounds.mu - 1e-9);
    CHECK(shortest.length() <= bounds.nu + 1e-9);
}

TEST_CASE("radius floor above the limit is infeasible") {
    const ProblemInstance inst = example_instance();
    CHECK_THROWS_WITH_AS(solve_minlength(inst, 60, 1.5 * testutil::kExampleRa),
                         doctest::Contains("DiscreteInfeasible"), Error);
}

TEST_CASE("free radius floor recovers a curve at least as long as the chord") {
    const ProblemInstance inst = example_instance();
    const DiscreteArcChain chain = solve_minlength(inst, 30, 0.0);
    CHECK(chain.length() >= distance(inst.a(), inst.b()) - 1e-9);
    // Vertex solutions ride the boundary: zero radii are expected here.
    CHECK(chain.min_radius() >= 0.0);
}

TEST_CASE("discrete infeasibility surfaces for impossible geometry") {
    const ProblemInstance inst = normalize_problem(Point2{0, 0}, Point2{-2.0, 0.1},
                                                   UnitVec2(1.0, 0.0), UnitVec2(0.0, 1.0));
    CHECK_THROWS_AS(solve_maxmin(inst, 12), Error);
}
