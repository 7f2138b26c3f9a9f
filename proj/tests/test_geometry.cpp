#include <doctest.h>

#include <random>

#include "cornercurves/curves.hpp"
#include "cornercurves/exact.hpp"
#include "cornercurves/geometry.hpp"
#include "test_helpers.hpp"

using namespace cornercurves;
using testutil::example_instance;

TEST_CASE("normalize_problem recovers the worked corner") {
    const ProblemInstance inst = example_instance();
    CHECK(std::abs(inst.corner().x) < 1e-12);
    CHECK(std::abs(inst.corner().y) < 1e-12);
    CHECK_NEAR(inst.omega(), testutil::kExampleOmega, 1e-12);
    CHECK_FALSE(inst.flipped());

    // Corner derived by intersection must agree with the supplied one.
    const ProblemInstance derived =
        normalize_problem(inst.a(), inst.b(), inst.alpha(), inst.beta());
    CHECK(distance(derived.corner(), inst.corner()) < 1e-12);
}

TEST_CASE("parallel tangents are rejected") {
    const UnitVec2 dir(1.0, 0.0);
    CHECK_THROWS_WITH_AS(normalize_problem(Point2{0, 0}, Point2{1, 1}, dir, dir),
                         doctest::Contains("ParallelTangents"), Error);
    // Anti-parallel is the same corner-less situation.
    CHECK_THROWS_AS(normalize_problem(Point2{0, 0}, Point2{1, 1}, dir, dir.negated()), Error);
}

TEST_CASE("degenerate corner is rejected") {
    // Tangent lines meet exactly at A.
    CHECK_THROWS_WITH_AS(
        normalize_problem(Point2{0, 0}, Point2{0, 1}, UnitVec2(1.0, 0.0), UnitVec2(0.0, 1.0)),
        doctest::Contains("DegenerateCorner"), Error);
    CHECK_THROWS_WITH_AS(
        normalize_problem(Point2{0, 0}, Point2{0, 1}, UnitVec2(1.0, 0.0), UnitVec2(0.0, 1.0),
                          Point2{0, 0}),
        doctest::Contains("DegenerateCorner"), Error);
}

TEST_CASE("corner hint must sit on both tangent lines") {
    const UnitVec2 alpha = UnitVec2::of(Point2{-1.0, 1.0});
    CHECK_THROWS_AS(normalize_problem(Point2{0.5, -0.5}, Point2{0.0, -0.5}, alpha,
                                      UnitVec2(0.0, -1.0), Point2{0.1, 0.0}),
                    Error);
}

TEST_CASE("mirrored input is flipped back into the canonical orientation") {
    // The worked corner reflected across the x axis turns the other way.
    const ProblemInstance inst =
        normalize_problem(Point2{0.5, 0.5}, Point2{0.0, 0.5}, UnitVec2::of(Point2{-1.0, -1.0}),
                          UnitVec2(0.0, 1.0), Point2{0.0, 0.0});
    CHECK(inst.flipped());
    CHECK_NEAR(inst.omega(), testutil::kExampleOmega, 1e-12);
    CHECK(feasibility_check(inst).feasible);
    // Roles swapped: the normalized curve starts at the mirrored B.
    CHECK_NEAR(inst.a().x, 0.0, 1e-15);
    CHECK_NEAR(inst.b().x, 0.5, 1e-15);
}

TEST_CASE("normalization is idempotent") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const ProblemInstance inst = testutil::random_instance(rng);
        const ProblemInstance again =
            normalize_problem(inst.a(), inst.b(), inst.alpha(), inst.beta(), inst.corner());
        CHECK_FALSE(again.flipped());
        CHECK(distance(again.a(), inst.a()) == 0.0);
        CHECK(distance(again.b(), inst.b()) == 0.0);
        CHECK(again.omega() == inst.omega());
    }
}

TEST_CASE("feasibility on the worked corner") {
    const FeasibilityReport rep = feasibility_check(example_instance());
    CHECK_NEAR(rep.u0, std::sqrt(2.0) / 2.0, 1e-12);
    CHECK_NEAR(rep.v0, 0.5, 1e-12);
    CHECK(rep.feasible);
}

TEST_CASE("tangent pointing away from the corner is infeasible") {
    // Reversing alpha keeps the same lines and corner but the sign test fails
    // (on the flipped instance, since the raw angle changes sign too).
    const ProblemInstance inst =
        normalize_problem(Point2{0.5, -0.5}, Point2{0.0, -0.5}, UnitVec2::of(Point2{1.0, -1.0}),
                          UnitVec2(0.0, -1.0), Point2{0.0, 0.0});
    const FeasibilityReport rep = feasibility_check(inst);
    CHECK_FALSE(rep.feasible);
    CHECK((rep.u0 < 0.0 || rep.v0 < 0.0));
}

TEST_CASE("length bounds on the worked corner") {
    const BoundsReport rep = length_bounds(example_instance());
    CHECK_NEAR(rep.mu, 0.5, 1e-12);
    CHECK_NEAR(rep.b_tilde, 0.5 * std::cos(M_PI / 8), 1e-12);
    CHECK_NEAR(rep.nu, (1.0 + std::sqrt(2.0)) / 2.0, 1e-12);
    CHECK_NEAR(rep.delta, 1.9519354268528595, 1e-12);
    // delta * nu = omega by definition.
    CHECK_NEAR(rep.delta * rep.nu, testutil::kExampleOmega, 1e-15);
}

TEST_CASE("exact curve length sits inside the bounds") {
    const ProblemInstance inst = example_instance();
    const BoundsReport rep = length_bounds(inst);
    const ExactSolution sol = build_arc_segment(inst);
    CHECK_NEAR(sol.path.total_length(), 0.6950906378997623, 1e-12);
    CHECK(sol.path.total_length() >= rep.mu);
    CHECK(sol.path.total_length() <= rep.nu);
}

TEST_CASE("infeasible geometry reports a nonpositive frame abscissa") {
    // B sits behind A relative to the half-angle frame.
    const ProblemInstance inst = normalize_problem(Point2{0, 0}, Point2{-2.0, 0.1},
                                                   UnitVec2(1.0, 0.0), UnitVec2(0.0, 1.0));
    CHECK_FALSE(feasibility_check(inst).feasible);
    CHECK_THROWS_WITH_AS(length_bounds(inst), doctest::Contains("NonPositiveBTilde"), Error);
}

TEST_CASE("bounds hold for random instances") {
    std::mt19937 rng(11);
    for (int i = 0; i < 25; ++i) {
        const ProblemInstance inst = testutil::random_instance(rng);
        const BoundsReport rep = length_bounds(inst);
        CHECK(rep.mu > 0.0);
        CHECK(rep.mu <= rep.nu + 1e-9);
        CHECK_NEAR(rep.delta * rep.nu, inst.omega(), 1e-12);
        const ExactSolution sol = build_arc_segment(inst);
        CHECK(sol.path.total_length() >= rep.mu - 1e-9);
        CHECK(sol.path.total_length() <= rep.nu + 1e-9);
        CHECK(1.0 / sol.r_a >= rep.delta - 1e-9);
    }
}

TEST_CASE("unit vector construction guards") {
    CHECK_THROWS_AS(UnitVec2(0.5, 0.5), Error);
    CHECK_THROWS_AS(UnitVec2::of(Point2{0.0, 0.0}), Error);
    const UnitVec2 u = UnitVec2::of(Point2{3.0, 4.0});
    CHECK_NEAR(u.dx(), 0.6, 1e-15);
    CHECK_NEAR(u.dy(), 0.8, 1e-15);
}
