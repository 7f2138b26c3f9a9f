#include "cornercurves/exact.hpp"

#include <algorithm>
#include <cmath>

namespace cornercurves {

namespace {

constexpr double kSweepDropTol = 1e-9;   // arcs below this sweep are dropped
constexpr double kLengthDropTol = 1e-12; // lines below this length are dropped

FeasibilityReport require_feasible(const ProblemInstance& inst) {
    const FeasibilityReport feas = feasibility_check(inst);
    if (!feas.feasible)
        throw Error(Errc::InfeasibleGeometry,
                    "tangent lengths are not both positive (u0=" + std::to_string(feas.u0) +
                        ", v0=" + std::to_string(feas.v0) + ")");
    return feas;
}

// Arc that starts at `from` with tangent direction angle `heading`, turns
// left by `sweep` with the given radius.
ArcPiece left_arc(Point2 from, double heading, double radius, double sweep) {
    const Point2 dir{std::cos(heading), std::sin(heading)};
    ArcPiece arc;
    arc.center = from + dir.rot90() * radius;
    arc.radius = radius;
    arc.start_angle = heading - M_PI / 2.0;
    arc.sweep = sweep;
    return arc;
}

double ray_distance(Point2 p, Point2 origin, Point2 dir) {
    return std::abs(dir.cross(p - origin));
}

}  // namespace

double compute_ra(const ProblemInstance& inst) {
    const FeasibilityReport feas = require_feasible(inst);
    const double t = std::min(feas.u0, feas.v0);
    return t * std::tan((M_PI - inst.omega()) / 2.0);
}

ExactSolution build_arc_segment(const ProblemInstance& inst) {
    const FeasibilityReport feas = require_feasible(inst);
    const double u0 = feas.u0, v0 = feas.v0;
    const double t = std::min(u0, v0);
    const double ra = t * std::tan((M_PI - inst.omega()) / 2.0);

    const Point2 a = inst.a(), b = inst.b(), o = inst.corner();
    const Point2 alpha = inst.alpha().vec(), beta = inst.beta().vec();
    const double heading_a = inst.alpha().angle();

    std::vector<PathPiece> pieces;
    ExactCase tag;
    double segment_length;

    if (u0 - v0 > kGeomTol) {
        // Segment A -> D along alpha, then the arc D -> B.
        const Point2 d = o - v0 * alpha;  // tangency point on [OA)
        pieces.emplace_back(LinePiece{a, d});
        pieces.emplace_back(left_arc(d, heading_a, ra, inst.omega()));
        tag = ExactCase::SegmentThenArc;
        segment_length = u0 - v0;
    } else if (v0 - u0 > kGeomTol) {
        // Arc A -> E, then segment E -> B along beta.
        const Point2 e = o + u0 * beta;  // tangency point on [OB)
        pieces.emplace_back(left_arc(a, heading_a, ra, inst.omega()));
        pieces.emplace_back(LinePiece{e, b});
        tag = ExactCase::ArcThenSegment;
        segment_length = v0 - u0;
    } else {
        pieces.emplace_back(left_arc(a, heading_a, ra, inst.omega()));
        tag = ExactCase::PureArc;
        segment_length = 0.0;
    }

    // The constructed circle must touch both tangent lines at distance R_a.
    const ArcPiece& arc =
        std::get<ArcPiece>(pieces[tag == ExactCase::SegmentThenArc ? 1 : 0]);
    if (std::abs(ray_distance(arc.center, o, alpha) - ra) > kGeomTol ||
        std::abs(ray_distance(arc.center, o, beta) - ra) > kGeomTol)
        throw Error(Errc::NumericalBreakdown, "inscribed circle failed the tangency self-check");

    return ExactSolution{ra, PiecewisePath(std::move(pieces)), tag, segment_length};
}

PiecewisePath build_dubins(const ProblemInstance& inst, double radius) {
    require_feasible(inst);
    if (!(radius > 0.0)) throw Error(Errc::InvalidArgument, "radius must be positive");
    const double ra = compute_ra(inst);
    if (radius > ra * (1.0 + 1e-12))
        throw Error(Errc::RadiusTooLarge, "radius " + std::to_string(radius) +
                                              " exceeds the admissible maximum " +
                                              std::to_string(ra));
    radius = std::min(radius, ra);

    const Point2 a = inst.a(), b = inst.b();
    const Point2 alpha = inst.alpha().vec(), beta = inst.beta().vec();
    const double heading_a = inst.alpha().angle();
    const double omega = inst.omega();

    // Equal circles tangent to the end rays at A and B; their centers sit on
    // the inner normals.
    const Point2 center_a = a + alpha.rot90() * radius;
    const Point2 center_b = b + beta.rot90() * radius;
    const Point2 gap = center_b - center_a;

    std::vector<PathPiece> pieces;
    if (gap.norm() <= kGeomTol) {
        // Both arcs share one circle: the symmetric limit, a single arc.
        pieces.emplace_back(left_arc(a, heading_a, radius, omega));
        return PiecewisePath(std::move(pieces));
    }

    // The connecting segment runs parallel to the line of centers, offset by
    // the radius toward the curve side.
    const Point2 u = gap * (1.0 / gap.norm());
    const Point2 d = center_a - u.rot90() * radius;
    const Point2 e = center_b - u.rot90() * radius;
    const double heading_u = std::atan2(u.y, u.x);

    double sweep1 = std::remainder(heading_u - heading_a, 2.0 * M_PI);
    if (sweep1 < 0.0) {
        if (sweep1 < -kSweepDropTol)
            throw Error(Errc::NumericalBreakdown, "negative sweep in the admissible range");
        sweep1 = 0.0;
    }
    double sweep2 = omega - sweep1;
    if (sweep2 < 0.0) {
        if (sweep2 < -kSweepDropTol)
            throw Error(Errc::NumericalBreakdown, "sweeps exceed the total turning angle");
        sweep2 = 0.0;
    }

    if (sweep1 >= kSweepDropTol)
        pieces.emplace_back(ArcPiece{center_a, radius, heading_a - M_PI / 2.0, sweep1});
    if (distance(d, e) >= kLengthDropTol)
        pieces.emplace_back(LinePiece{sweep1 >= kSweepDropTol ? d : a, e});
    if (sweep2 >= kSweepDropTol)
        pieces.emplace_back(ArcPiece{center_b, radius, heading_u - M_PI / 2.0, sweep2});
    return PiecewisePath(std::move(pieces));
}

ParabolaBaseline baseline_parabola(const ProblemInstance& inst) {
    require_feasible(inst);
    ParabolaBaseline par;
    par.a = inst.a();
    par.o = inst.corner();
    par.b = inst.b();

    // P'(t) = 2[(1-t) e0 + t e1], P'' = 2(e1 - e0), cross constant.
    const Point2 e0 = par.o - par.a;
    const Point2 e1 = par.b - par.o;
    const Point2 de = e1 - e0;
    const double cross = 4.0 * e0.cross(e1);
    if (std::abs(cross) <= kUnitTol)
        throw Error(Errc::ParallelTangents, "control points are collinear");

    const double qa = de.dot(de);  // > 0 since cross != 0
    const double t_vertex = -e0.dot(de) / qa;
    par.t_min = std::clamp(t_vertex, 0.0, 1.0);
    const Point2 dp = 2.0 * (e0 + par.t_min * de);
    const double speed2 = dp.dot(dp);
    par.min_radius = speed2 * std::sqrt(speed2) / std::abs(cross);
    return par;
}

std::vector<CurvePoint> sample_parabola(const ParabolaBaseline& par, const ProblemInstance& inst,
                                        int n) {
    if (n < 2) throw Error(Errc::InvalidArgument, "need at least two samples");
    const Point2 e0 = par.o - par.a;
    const Point2 e1 = par.b - par.o;
    const double cross = 4.0 * e0.cross(e1);
    const double alpha_angle = inst.alpha().angle();

    std::vector<CurvePoint> out(static_cast<size_t>(n));
    double s = 0.0;
    Point2 prev = par.a;
    double prev_phi = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        const double w0 = (1 - t) * (1 - t), w1 = 2 * t * (1 - t), w2 = t * t;
        CurvePoint cp;
        cp.position = par.a * w0 + par.o * w1 + par.b * w2;
        const Point2 dp = 2.0 * (e0 + t * (e1 - e0));
        const double speed2 = dp.dot(dp);
        cp.curvature = std::abs(cross) / (speed2 * std::sqrt(speed2));
        // Continuous determination of the tangent angle relative to alpha.
        double phi = std::atan2(dp.y, dp.x) - alpha_angle;
        phi = prev_phi + std::remainder(phi - prev_phi, 2.0 * M_PI);
        prev_phi = phi;
        cp.phi = phi;
        s += distance(prev, cp.position);
        cp.s = s;
        prev = cp.position;
        out[static_cast<size_t>(i)] = cp;
    }
    return out;
}

}  // namespace cornercurves
