#pragma once

#include <cmath>
#include <optional>

#include "cornercurves/errors.hpp"

namespace cornercurves {

// Tolerances used by the geometric predicates. Coordinates are assumed to be
// desk scale, O(1) in length units.
inline constexpr double kUnitTol = 1e-12;  // unit-vector and cross-product tests
inline constexpr double kGeomTol = 1e-9;   // point coincidence and alignment tests

/// Planar point; doubles duty as a displacement vector.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Point2 operator+(Point2 r) const { return {x + r.x, y + r.y}; }
    constexpr Point2 operator-(Point2 r) const { return {x - r.x, y - r.y}; }
    constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
    friend constexpr Point2 operator*(double s, Point2 p) { return {p.x * s, p.y * s}; }

    constexpr double dot(Point2 r) const { return x * r.x + y * r.y; }
    constexpr double cross(Point2 r) const { return x * r.y - y * r.x; }
    double norm() const { return std::hypot(x, y); }

    /// Counterclockwise quarter turn.
    constexpr Point2 rot90() const { return {-y, x}; }

    Point2 rotated(double angle) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {x * c - y * s, x * s + y * c};
    }
};

inline double distance(Point2 a, Point2 b) { return (b - a).norm(); }

/// Signed angle from u to v in (-pi, pi].
inline double signed_angle(Point2 u, Point2 v) { return std::atan2(u.cross(v), u.dot(v)); }

/// Direction vector with unit norm enforced at construction.
class UnitVec2 {
public:
    /// Wraps components that are already unit length (within kUnitTol).
    UnitVec2(double dx, double dy);

    /// Normalizes an arbitrary nonzero vector.
    static UnitVec2 of(Point2 v);

    double dx() const { return v_.x; }
    double dy() const { return v_.y; }
    Point2 vec() const { return v_; }
    double angle() const { return std::atan2(v_.y, v_.x); }
    UnitVec2 negated() const { return UnitVec2(-v_.x, -v_.y); }

private:
    Point2 v_;
};

/// The normalized corner problem: endpoints A and B, corner O, end tangents
/// alpha (at A, pointing toward O) and beta (at B, pointing away from O), and
/// the total turning angle omega in (0, pi).
///
/// `flipped` records that the input was traversed in the other direction to
/// reach this orientation, so emitted curves can be presented the way the
/// caller stated the problem.
class ProblemInstance {
public:
    ProblemInstance(Point2 a, Point2 b, Point2 corner, UnitVec2 alpha, UnitVec2 beta,
                    bool flipped);

    Point2 a() const { return a_; }
    Point2 b() const { return b_; }
    Point2 corner() const { return o_; }
    UnitVec2 alpha() const { return alpha_; }
    UnitVec2 beta() const { return beta_; }
    double omega() const { return omega_; }
    bool flipped() const { return flipped_; }

    /// In-plane normal of the normalized frame: alpha rotated by +pi/2.
    /// Positive curvature is a left turn in this frame.
    UnitVec2 k_hat() const { return UnitVec2::of(alpha_.vec().rot90()); }

private:
    Point2 a_, b_, o_;
    UnitVec2 alpha_, beta_;
    double omega_;
    bool flipped_;
};

struct FeasibilityReport {
    double u0 = 0.0;  ///< AO = u0 * alpha
    double v0 = 0.0;  ///< OB = v0 * beta
    bool feasible = false;
};

/// Analytic envelope every admissible curve must respect:
/// mu <= length <= nu and max curvature >= delta.
struct BoundsReport {
    double mu = 0.0;       ///< lower length bound, |AB|
    double nu = 0.0;       ///< upper length bound, b_tilde / cos(omega/2)
    double delta = 0.0;    ///< lower bound on the max curvature, omega / nu
    double b_tilde = 0.0;  ///< abscissa of B in the half-angle frame at A
};

/// Builds the canonical instance from endpoints and tangents. The corner is
/// taken from `corner_hint` when given (and checked to sit on both tangent
/// lines), otherwise computed as the line intersection. If the raw signed
/// angle from alpha to beta is negative the problem is reversed (A and B
/// swapped, tangents negated) so that omega lands in (0, pi).
///
/// Throws ParallelTangents when |cross(alpha, beta)| <= kUnitTol and
/// DegenerateCorner when the corner coincides with A or B.
ProblemInstance normalize_problem(Point2 a, Point2 b, UnitVec2 alpha, UnitVec2 beta,
                                  std::optional<Point2> corner_hint = std::nullopt);

/// Signed tangent lengths u0, v0 along alpha and beta. Both strictly positive
/// is necessary for any admissible curve to exist with this corner.
FeasibilityReport feasibility_check(const ProblemInstance& inst);

/// Length and curvature envelope. Throws NonPositiveBTilde when the geometry
/// cannot support any admissible curve (B behind A in the half-angle frame).
BoundsReport length_bounds(const ProblemInstance& inst);

}  // namespace cornercurves
