#pragma once

#include "cornercurves/curves.hpp"
#include "cornercurves/geometry.hpp"

namespace cornercurves {

enum class ExactCase {
    SegmentThenArc,  // |OA| > |OB|: line from A, then the arc into B
    ArcThenSegment,  // |OB| > |OA|: arc from A, then the line into B
    PureArc,         // |OA| = |OB|: a single arc
};

/// The unique admissible curve made of one circular arc of the largest
/// possible radius and at most one line segment.
struct ExactSolution {
    double r_a = 0.0;
    PiecewisePath path;
    ExactCase case_tag = ExactCase::PureArc;
    double segment_length = 0.0;
};

/// Largest radius of a circle tangent to both rays [OA) and [OB) at distance
/// min(|OA|, |OB|) from the corner: R_a = min(|OA|, |OB|) * tan((pi - omega)/2).
/// Throws InfeasibleGeometry when the instance fails the feasibility check.
double compute_ra(const ProblemInstance& inst);

/// Builds the arc+segment curve realizing compute_ra. The arc sweeps the full
/// turning angle omega; the segment absorbs | |OA| - |OB| | and disappears in
/// the symmetric case.
ExactSolution build_arc_segment(const ProblemInstance& inst);

/// Bounded-curvature geodesic with both arc radii equal to R: arc at the A
/// side, common tangent segment, arc at the B side. Admissible exactly for
/// R in (0, R_a]; at R = R_a one arc degenerates and the result coincides
/// with build_arc_segment. Throws RadiusTooLarge above R_a.
PiecewisePath build_dubins(const ProblemInstance& inst, double radius);

/// Quadratic Bezier through A, O, B used as the reference the arc+segment
/// curve improves on.
struct ParabolaBaseline {
    Point2 a, o, b;        // control points
    double min_radius = 0.0;
    double t_min = 0.0;    // parameter of the curvature maximum, in [0, 1]
};

/// Minimum radius of curvature of the control-point parabola, in closed form:
/// |P' x P''| is constant, so the minimum of |P'(t)|^3 / |P' x P''| sits at
/// the vertex of the quadratic |P'(t)|^2, clamped to [0, 1].
ParabolaBaseline baseline_parabola(const ProblemInstance& inst);

/// Dense samples of the baseline for export; s is the running chord length
/// and phi the tangent angle measured from alpha.
std::vector<CurvePoint> sample_parabola(const ParabolaBaseline& par, const ProblemInstance& inst,
                                        int n);

}  // namespace cornercurves
