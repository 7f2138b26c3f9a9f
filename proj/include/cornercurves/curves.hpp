#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cornercurves/geometry.hpp"

namespace cornercurves {

/// Circular arc stored by center, radius and angular span so curvature is
/// exact by construction; endpoints are derived. A positive sweep is a
/// counterclockwise traversal (positive curvature); builders in this library
/// only emit positive sweeps, negative ones are representable for validation.
struct ArcPiece {
    Point2 center;
    double radius = 0.0;       // > 0
    double start_angle = 0.0;  // angle of (start - center)
    double sweep = 0.0;        // signed, != 0

    Point2 point_at(double turn) const {
        return center + Point2{std::cos(start_angle + turn), std::sin(start_angle + turn)} * radius;
    }
    Point2 start() const { return point_at(0.0); }
    Point2 end() const { return point_at(sweep); }
    /// Tangent direction angle at a signed turn from the start.
    double tangent_angle_at(double turn) const {
        return start_angle + turn + (sweep >= 0.0 ? M_PI / 2.0 : -M_PI / 2.0);
    }
    double length() const { return radius * std::abs(sweep); }
    double curvature() const { return (sweep >= 0.0 ? 1.0 : -1.0) / radius; }
};

struct LinePiece {
    Point2 start;
    Point2 end;  // != start

    double length() const { return distance(start, end); }
    double tangent_angle() const { return std::atan2(end.y - start.y, end.x - start.x); }
};

using PathPiece = std::variant<LinePiece, ArcPiece>;

Point2 piece_start(const PathPiece& p);
Point2 piece_end(const PathPiece& p);
double piece_length(const PathPiece& p);
double piece_start_angle(const PathPiece& p);  // tangent direction at the start
double piece_end_angle(const PathPiece& p);    // tangent direction at the end
double piece_sweep(const PathPiece& p);        // signed turning, 0 for lines

struct PathTolerances {
    double position = kGeomTol;  // joint coincidence
    double tangent = kGeomTol;   // joint tangent agreement, radians
};

/// Ordered arc/line pieces with G1 joints, traversed at unit speed.
/// Construction verifies positional and tangent continuity at every joint and
/// rejects zero-length pieces.
class PiecewisePath {
public:
    explicit PiecewisePath(std::vector<PathPiece> pieces, PathTolerances tol = {});

    const std::vector<PathPiece>& pieces() const { return pieces_; }
    double total_length() const { return total_length_; }
    Point2 start_point() const { return piece_start(pieces_.front()); }
    Point2 end_point() const { return piece_end(pieces_.back()); }
    double start_angle() const { return piece_start_angle(pieces_.front()); }
    double end_angle() const;
    /// Sum of signed sweeps.
    double total_turning() const;

private:
    std::vector<PathPiece> pieces_;
    double total_length_ = 0.0;
};

/// One sample of the arc-length parametrization: position, tangent angle
/// measured from the path's initial tangent, and algebraic curvature.
struct CurvePoint {
    double s = 0.0;
    Point2 position;
    double phi = 0.0;
    double curvature = 0.0;
};

/// n >= 2 samples at uniform arc length over [0, L]. The first and last
/// samples reproduce the path endpoints.
std::vector<CurvePoint> sample_path(const PiecewisePath& path, int n);

struct CurvatureStep {
    double s_begin = 0.0;
    double s_end = 0.0;
    double curvature = 0.0;
};

struct CurvatureProfile {
    std::vector<CurvatureStep> steps;
    double max_curvature = 0.0;
    double min_radius = 0.0;  // +inf when the path is all lines
};

CurvatureProfile curvature_profile(const PiecewisePath& path);

/// Clause-by-clause admissibility check of a path against an instance:
/// endpoints, end tangents, monotone tangent angle, total turning equal to
/// omega and tangent angle confined to [0, omega], all within tol.
struct ValidationReport {
    bool start_point_ok = false;
    bool end_point_ok = false;
    bool start_tangent_ok = false;
    bool end_tangent_ok = false;
    bool monotone_ok = false;      // phi nondecreasing (no negative sweep)
    bool total_turning_ok = false; // phi(L) - phi(0) = omega
    bool range_ok = false;         // phi stays within [0, omega]
    std::string detail;            // human-readable description of the first failure

    bool pass() const {
        return start_point_ok && end_point_ok && start_tangent_ok && end_tangent_ok &&
               monotone_ok && total_turning_ok && range_ok;
    }
};

ValidationReport validate_membership(const PiecewisePath& path, const ProblemInstance& inst,
                                     double tol);

/// Samples n points and tests that every sampled point lies on the inner
/// normal side of every sampled tangent line, within tol. Holds for any
/// admissible curve with total turning below pi.
bool half_plane_check(const PiecewisePath& path, int n, double tol = kGeomTol);

}  // namespace cornercurves
