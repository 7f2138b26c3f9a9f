#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "cornercurves/discrete.hpp"
#include "cornercurves/lp.hpp"
#include "test_helpers.hpp"

using namespace cornercurves;
using testutil::example_instance;

TEST_CASE("single arc endpoint is the chord of the turn") {
    const double omega = testutil::kExampleOmega;
    const double r = 0.3;
    const std::array<double, 1> theta{omega};
    const std::array<double, 1> len{r * omega};
    const ChainEvaluation eval = evaluate_arc_chain(theta, len);
    const std::complex<double> expected =
        2.0 * r * std::sin(omega / 2.0) * std::polar(1.0, omega / 2.0);
    CHECK(std::abs(eval.endpoint - expected) < 1e-12);
    CHECK(eval.total_turning == omega);
}

TEST_CASE("zero turning is a straight piece") {
    const std::array<double, 1> theta{0.0};
    const std::array<double, 1> len{0.75};
    const ChainEvaluation eval = evaluate_arc_chain(theta, len);
    CHECK_NEAR(eval.endpoint.real(), 0.75, 1e-15);
    CHECK(eval.endpoint.imag() == 0.0);
    CHECK(eval.total_turning == 0.0);
}

TEST_CASE("the exact curve encoded as a chain closes on B") {
    const ProblemInstance inst = example_instance();
    const EndpointSystem sys = assemble_endpoint_system(inst, 2);
    // Segment of length (sqrt(2)-1)/2, then the full arc.
    const std::array<double, 2> theta{0.0, inst.omega()};
    const std::array<double, 2> len{testutil::kExampleRa,
                                    testutil::kExampleRa * inst.omega()};
    const ChainEvaluation eval = evaluate_arc_chain(theta, len);
    CHECK(std::abs(eval.endpoint - std::complex<double>{sys.rhs_re, sys.rhs_im}) < 1e-12);
    CHECK_NEAR(eval.total_turning, inst.omega(), 1e-12);
}

TEST_CASE("negative turning is refused") {
    const std::array<double, 2> theta{0.1, -0.1};
    const std::array<double, 2> len{1.0, 1.0};
    CHECK_THROWS_WITH_AS(evaluate_arc_chain(theta, len),
                         doctest::Contains("NegativeTurning"), Error);
}

TEST_CASE("endpoint system columns have the chord norm") {
    const ProblemInstance inst = example_instance();
    for (int p : {2, 3, 7, 50}) {
        const EndpointSystem sys = assemble_endpoint_system(inst, p);
        const double theta0 = inst.omega() / p;
        const double expected = 2.0 * std::sin(theta0 / 2.0);
        for (int k = 0; k < p; ++k) {
            const double norm = std::hypot(sys.row_re[static_cast<size_t>(k)],
                                           sys.row_im[static_cast<size_t>(k)]);
            CHECK_NEAR(norm, expected, 1e-14);
        }
    }
}

TEST_CASE("the linear system is the equal-angle chain evaluation") {
    // For any radius vector, A R equals the forward evaluation; the system is
    // exact, not an approximation.
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> rad(0.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const ProblemInstance inst = testutil::random_instance(rng);
        const int p = 2 + trial % 9;
        const EndpointSystem sys = assemble_endpoint_system(inst, p);
        std::vector<double> radii(static_cast<size_t>(p));
        std::vector<double> theta(static_cast<size_t>(p), inst.omega() / p);
        std::vector<double> len(static_cast<size_t>(p));
        for (int k = 0; k < p; ++k) {
            radii[static_cast<size_t>(k)] = rad(rng);
            len[static_cast<size_t>(k)] = radii[static_cast<size_t>(k)] * inst.omega() / p;
        }
        const ChainEvaluation eval = evaluate_arc_chain(theta, len);
        std::complex<double> lhs{0.0, 0.0};
        for (int k = 0; k < p; ++k)
            lhs += std::complex<double>{sys.row_re[static_cast<size_t>(k)],
                                        sys.row_im[static_cast<size_t>(k)]} *
                   radii[static_cast<size_t>(k)];
        CHECK(std::abs(lhs - eval.endpoint) < 1e-12);
    }
}

namespace {

// Independent 2x2 solve of the p=2 endpoint system by Cramer's rule.
std::array<double, 2> p2_oracle(const EndpointSystem& sys) {
    const double det = sys.row_re[0] * sys.row_im[1] - sys.row_re[1] * sys.row_im[0];
    REQUIRE(std::abs(det) > 1e-12);
    return {(sys.rhs_re * sys.row_im[1] - sys.row_re[1] * sys.rhs_im) / det,
            (sys.row_re[0] * sys.rhs_im - sys.rhs_re * sys.row_im[0]) / det};
}

}  // namespace

TEST_CASE("two-arc chain matches the closed-form solve and reaches B") {
    const ProblemInstance inst = example_instance();
    const EndpointSystem sys = assemble_endpoint_system(inst, 2);
    const auto oracle = p2_oracle(sys);
    CHECK(oracle[0] > 0.0);
    CHECK(oracle[1] > 0.0);

    const DiscreteArcChain chain = make_chain(inst, {oracle[0], oracle[1]});
    const PiecewisePath path = chain_to_path(chain, inst);
    REQUIRE(path.pieces().size() == 2);
    CHECK_NEAR(path.total_turning(), inst.omega(), 1e-12);
    CHECK(distance(path.end_point(), inst.b()) <
          1e-9 * (1.0 + distance(inst.a(), inst.b())));
    CHECK(validate_membership(path, inst, 1e-6).pass());
}

TEST_CASE("perturbed radii no longer close the chain") {
    const ProblemInstance inst = example_instance();
    const auto oracle = p2_oracle(assemble_endpoint_system(inst, 2));
    const DiscreteArcChain off = make_chain(inst, {oracle[0] * 1.1, oracle[1]});
    CHECK_THROWS_WITH_AS(chain_to_path(off, inst), doctest::Contains("EndpointMismatch"),
                         Error);
}

TEST_CASE("chain paths report the smallest radius exactly") {
    const ProblemInstance inst = example_instance();
    const DiscreteArcChain chain = solve_maxmin(inst, 8);
    const PiecewisePath path = chain_to_path(chain, inst);
    CHECK(curvature_profile(path).min_radius == chain.min_radius());
}

TEST_CASE("doubling every arc keeps the chain feasible") {
    const ProblemInstance inst = example_instance();
    for (int p : {2, 5}) {
        const DiscreteArcChain chain = solve_maxmin(inst, p);
        const DiscreteArcChain fine = refine_chain(chain);
        CHECK(fine.p == 2 * p);
        CHECK_NEAR(fine.theta0, inst.omega() / (2 * p), 1e-15);
        const EndpointSystem sys = assemble_endpoint_system(inst, 2 * p);
        CHECK(std::abs(sys.residual(fine.radii)) < 1e-9);
    }
}

TEST_CASE("chains from random LP objectives reassemble on B") {
    // Any feasible point of the endpoint system must close once rebuilt as
    // arcs; exercise vertices picked out by random objectives.
    const ProblemInstance inst = example_instance();
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> weight(-2.0, -0.1);
    const double scale = 1.0 + distance(inst.a(), inst.b());
    for (int p : {2, 3, 5, 10}) {
        const EndpointSystem sys = assemble_endpoint_system(inst, p);
        for (int trial = 0; trial < 6; ++trial) {
            LpStandardForm lp;
            lp.objective.resize(static_cast<size_t>(p));
            for (auto& w : lp.objective) w = weight(rng);
            lp.eq_matrix = {std::vector<double>(sys.row_re.begin(), sys.row_re.end()),
                            std::vector<double>(sys.row_im.begin(), sys.row_im.end())};
            lp.eq_rhs = {sys.rhs_re, sys.rhs_im};
            const LpSolution sol = solve_lp(lp);
            REQUIRE(sol.status == LpStatus::Optimal);
            CHECK(std::abs(sys.residual(sol.x)) < 1e-9 * scale);

            // Rebuild as a path when all radii are usable arcs.
            bool positive = true;
            for (double r : sol.x) positive = positive && r > 0.0;
            if (positive) {
                const PiecewisePath path = chain_to_path(make_chain(inst, sol.x), inst);
                CHECK(distance(path.end_point(), inst.b()) < 1e-9 * scale);
            }
        }
    }
}

TEST_CASE("mirrored instances close through the flip flag") {
    // Normalization reverses mirrored input; the discrete pipeline must not
    // notice.
    const ProblemInstance plain = example_instance();
    const ProblemInstance mirrored =
        normalize_problem(Point2{0.5, 0.5}, Point2{0.0, 0.5}, UnitVec2::of(Point2{-1.0, -1.0}),
                          UnitVec2(0.0, 1.0), Point2{0.0, 0.0});
    REQUIRE(mirrored.flipped());
    const DiscreteArcChain a = solve_maxmin(plain, 8);
    const DiscreteArcChain b = solve_maxmin(mirrored, 8);
    CHECK_NEAR(a.min_radius(), b.min_radius(), 1e-9);
    CHECK(validate_membership(chain_to_path(b, mirrored), mirrored, 1e-6).pass());
}

TEST_CASE("chain construction guards") {
    const ProblemInstance inst = example_instance();
    CHECK_THROWS_AS(make_chain(inst, {1.0}), Error);
    CHECK_THROWS_AS(make_chain(inst, {1.0, -0.5}), Error);
    CHECK_THROWS_AS(assemble_endpoint_system(inst, 1), Error);
    // Zero radii are representable but cannot be assembled into arcs.
    const DiscreteArcChain zero = make_chain(inst, {0.0, 1.0});
    CHECK_THROWS_AS(chain_to_path(zero, inst), Error);
}
