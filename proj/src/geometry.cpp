#include "cornercurves/geometry.hpp"

#include <cmath>
#include <string>

namespace cornercurves {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::ParallelTangents: return "ParallelTangents";
        case Errc::DegenerateCorner: return "DegenerateCorner";
        case Errc::InfeasibleGeometry: return "InfeasibleGeometry";
        case Errc::NonPositiveBTilde: return "NonPositiveBTilde";
        case Errc::RadiusTooLarge: return "RadiusTooLarge";
        case Errc::NegativeTurning: return "NegativeTurning";
        case Errc::EndpointMismatch: return "EndpointMismatch";
        case Errc::DiscreteInfeasible: return "DiscreteInfeasible";
        case Errc::NumericalBreakdown: return "NumericalBreakdown";
        case Errc::IoFailure: return "IoFailure";
    }
    return "UnknownError";
}

UnitVec2::UnitVec2(double dx, double dy) : v_{dx, dy} {
    if (!std::isfinite(dx) || !std::isfinite(dy))
        throw Error(Errc::InvalidArgument, "unit vector with non-finite components");
    if (std::abs(dx * dx + dy * dy - 1.0) > kUnitTol)
        throw Error(Errc::InvalidArgument, "vector is not unit length");
}

UnitVec2 UnitVec2::of(Point2 v) {
    const double n = v.norm();
    if (!(n > kUnitTol))
        throw Error(Errc::InvalidArgument, "cannot normalize a near-zero vector");
    return UnitVec2(v.x / n, v.y / n);
}

namespace {

// Distance from p to the line through q with direction d (unit).
double line_distance(Point2 p, Point2 q, Point2 d) { return std::abs(d.cross(p - q)); }

}  // namespace

ProblemInstance::ProblemInstance(Point2 a, Point2 b, Point2 corner, UnitVec2 alpha,
                                 UnitVec2 beta, bool flipped)
    : a_(a), b_(b), o_(corner), alpha_(alpha), beta_(beta), flipped_(flipped) {
    if (distance(a_, o_) <= kGeomTol || distance(b_, o_) <= kGeomTol)
        throw Error(Errc::DegenerateCorner, "corner coincides with an endpoint");
    if (distance(a_, b_) <= kGeomTol)
        throw Error(Errc::InvalidArgument, "endpoints coincide");
    // Tangents must run along their chords; the sign is free here, feasibility
    // decides it later.
    const Point2 oa = o_ - a_;
    const Point2 bo = b_ - o_;
    if (std::abs(UnitVec2::of(oa).vec().cross(alpha_.vec())) > kGeomTol)
        throw Error(Errc::InvalidArgument, "alpha is not collinear with the line (AO)");
    if (std::abs(UnitVec2::of(bo).vec().cross(beta_.vec())) > kGeomTol)
        throw Error(Errc::InvalidArgument, "beta is not collinear with the line (OB)");
    omega_ = signed_angle(alpha_.vec(), beta_.vec());
    if (!(omega_ > 0.0 && omega_ < M_PI))
        throw Error(Errc::InvalidArgument, "instance is not normalized: omega outside (0, pi)");
}

ProblemInstance normalize_problem(Point2 a, Point2 b, UnitVec2 alpha, UnitVec2 beta,
                                  std::optional<Point2> corner_hint) {
    const double cross = alpha.vec().cross(beta.vec());
    if (std::abs(cross) <= kUnitTol)
        throw Error(Errc::ParallelTangents, "end tangents are parallel");

    Point2 corner{};
    if (corner_hint) {
        corner = *corner_hint;
        if (line_distance(corner, a, alpha.vec()) > kGeomTol ||
            line_distance(corner, b, beta.vec()) > kGeomTol)
            throw Error(Errc::InvalidArgument,
                        "supplied corner does not agree with the tangent lines");
    } else {
        // A + t*alpha meets B + s*beta at t = cross(B-A, beta)/cross(alpha, beta).
        const double t = (b - a).cross(beta.vec()) / cross;
        corner = a + t * alpha.vec();
    }
    if (distance(corner, a) <= kGeomTol || distance(corner, b) <= kGeomTol)
        throw Error(Errc::DegenerateCorner, "corner coincides with an endpoint");

    const double raw = signed_angle(alpha.vec(), beta.vec());
    if (raw > 0.0)
        return ProblemInstance(a, b, corner, alpha, beta, /*flipped=*/false);
    // Traverse the other way: swap endpoints, negate tangents.
    return ProblemInstance(b, a, corner, beta.negated(), alpha.negated(), /*flipped=*/true);
}

FeasibilityReport feasibility_check(const ProblemInstance& inst) {
    FeasibilityReport rep;
    rep.u0 = (inst.corner() - inst.a()).dot(inst.alpha().vec());
    rep.v0 = (inst.b() - inst.corner()).dot(inst.beta().vec());
    rep.feasible = rep.u0 > 0.0 && rep.v0 > 0.0;
    return rep;
}

BoundsReport length_bounds(const ProblemInstance& inst) {
    BoundsReport rep;
    rep.mu = distance(inst.a(), inst.b());
    // Half-angle frame: first axis is alpha turned by +omega/2, so that the
    // tangent angle stays within [-omega/2, omega/2] along any admissible curve.
    const Point2 i_hat = inst.alpha().vec().rotated(inst.omega() / 2.0);
    rep.b_tilde = (inst.b() - inst.a()).dot(i_hat);
    if (rep.b_tilde <= 0.0)
        throw Error(Errc::NonPositiveBTilde, "B lies behind A in the half-angle frame");
    rep.nu = rep.b_tilde / std::cos(inst.omega() / 2.0);
    rep.delta = inst.omega() / rep.nu;
    return rep;
}

}  // namespace cornercurves
