#include "cornercurves/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cornercurves {

namespace {

struct StartVisitor {
    Point2 operator()(const LinePiece& l) const { return l.start; }
    Point2 operator()(const ArcPiece& a) const { return a.start(); }
};
struct EndVisitor {
    Point2 operator()(const LinePiece& l) const { return l.end; }
    Point2 operator()(const ArcPiece& a) const { return a.end(); }
};

double wrap_angle(double a) { return std::remainder(a, 2.0 * M_PI); }

}  // namespace

Point2 piece_start(const PathPiece& p) { return std::visit(StartVisitor{}, p); }
Point2 piece_end(const PathPiece& p) { return std::visit(EndVisitor{}, p); }

double piece_length(const PathPiece& p) {
    return std::visit([](const auto& x) { return x.length(); }, p);
}

double piece_start_angle(const PathPiece& p) {
    if (const auto* l = std::get_if<LinePiece>(&p)) return l->tangent_angle();
    return std::get<ArcPiece>(p).tangent_angle_at(0.0);
}

double piece_end_angle(const PathPiece& p) {
    if (const auto* l = std::get_if<LinePiece>(&p)) return l->tangent_angle();
    const auto& a = std::get<ArcPiece>(p);
    return a.tangent_angle_at(a.sweep);
}

double piece_sweep(const PathPiece& p) {
    if (std::holds_alternative<LinePiece>(p)) return 0.0;
    return std::get<ArcPiece>(p).sweep;
}

PiecewisePath::PiecewisePath(std::vector<PathPiece> pieces, PathTolerances tol)
    : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw Error(Errc::InvalidArgument, "path needs at least one piece");
    for (const auto& p : pieces_) {
        if (const auto* a = std::get_if<ArcPiece>(&p)) {
            if (!(a->radius > 0.0))
                throw Error(Errc::InvalidArgument, "arc radius must be positive");
            if (a->sweep == 0.0)
                throw Error(Errc::InvalidArgument, "zero-sweep arc piece");
        } else {
            if (!(std::get<LinePiece>(p).length() > 0.0))
                throw Error(Errc::InvalidArgument, "zero-length line piece");
        }
        total_length_ += piece_length(p);
    }
    for (size_t i = 1; i < pieces_.size(); ++i) {
        if (distance(piece_end(pieces_[i - 1]), piece_start(pieces_[i])) > tol.position)
            throw Error(Errc::InvalidArgument, "path pieces are not positionally continuous");
        const double turn =
            wrap_angle(piece_start_angle(pieces_[i]) - piece_end_angle(pieces_[i - 1]));
        if (std::abs(turn) > tol.tangent)
            throw Error(Errc::InvalidArgument, "path pieces are not tangent continuous");
    }
}

double PiecewisePath::end_angle() const { return piece_end_angle(pieces_.back()); }

double PiecewisePath::total_turning() const {
    double t = 0.0;
    for (const auto& p : pieces_) t += piece_sweep(p);
    return t;
}

std::vector<CurvePoint> sample_path(const PiecewisePath& path, int n) {
    if (n < 2) throw Error(Errc::InvalidArgument, "need at least two samples");

    // Cumulative length and turning at piece starts.
    const auto& pieces = path.pieces();
    std::vector<double> s0(pieces.size() + 1, 0.0), phi0(pieces.size() + 1, 0.0);
    for (size_t i = 0; i < pieces.size(); ++i) {
        s0[i + 1] = s0[i] + piece_length(pieces[i]);
        phi0[i + 1] = phi0[i] + piece_sweep(pieces[i]);
    }
    const double L = s0.back();

    std::vector<CurvePoint> out(static_cast<size_t>(n));
    size_t k = 0;
    for (int i = 0; i < n; ++i) {
        const double s = (i == n - 1) ? L : L * static_cast<double>(i) / (n - 1);
        while (k + 1 < pieces.size() && s >= s0[k + 1]) ++k;
        const double ds = std::min(s - s0[k], s0[k + 1] - s0[k]);
        CurvePoint cp;
        cp.s = s;
        if (const auto* line = std::get_if<LinePiece>(&pieces[k])) {
            const Point2 dir = (line->end - line->start) * (1.0 / line->length());
            cp.position = line->start + dir * ds;
            cp.phi = phi0[k];
            cp.curvature = 0.0;
        } else {
            const auto& arc = std::get<ArcPiece>(pieces[k]);
            const double turn = (arc.sweep >= 0.0 ? 1.0 : -1.0) * ds / arc.radius;
            cp.position = arc.point_at(turn);
            cp.phi = phi0[k] + turn;
            cp.curvature = arc.curvature();
        }
        out[static_cast<size_t>(i)] = cp;
    }
    // Endpoints come straight from the stored geometry.
    out.front().position = path.start_point();
    out.back().position = path.end_point();
    return out;
}

CurvatureProfile curvature_profile(const PiecewisePath& path) {
    CurvatureProfile prof;
    prof.min_radius = std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (const auto& p : path.pieces()) {
        CurvatureStep step;
        step.s_begin = s;
        s += piece_length(p);
        step.s_end = s;
        if (const auto* a = std::get_if<ArcPiece>(&p)) {
            step.curvature = a->curvature();
            prof.max_curvature = std::max(prof.max_curvature, std::abs(step.curvature));
            prof.min_radius = std::min(prof.min_radius, a->radius);
        }
        prof.steps.push_back(step);
    }
    return prof;
}

ValidationReport validate_membership(const PiecewisePath& path, const ProblemInstance& inst,
                                     double tol) {
    if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
    ValidationReport rep;
    std::ostringstream detail;

    rep.start_point_ok = distance(path.start_point(), inst.a()) <= tol;
    rep.end_point_ok = distance(path.end_point(), inst.b()) <= tol;
    rep.start_tangent_ok =
        std::abs(wrap_angle(path.start_angle() - inst.alpha().angle())) <= tol;
    rep.end_tangent_ok = std::abs(wrap_angle(path.end_angle() - inst.beta().angle())) <= tol;

    // phi is piecewise monotone, so piece sweeps tell the whole story.
    rep.monotone_ok = true;
    double phi = 0.0, phi_min = 0.0, phi_max = 0.0, s = 0.0;
    for (const auto& p : path.pieces()) {
        const double sweep = piece_sweep(p);
        if (sweep < -tol && rep.monotone_ok) {
            rep.monotone_ok = false;
            detail << "phi non-monotone at s=" << s << "; ";
        }
        phi += sweep;
        phi_min = std::min(phi_min, phi);
        phi_max = std::max(phi_max, phi);
        s += piece_length(p);
    }
    rep.total_turning_ok = std::abs(phi - inst.omega()) <= tol;
    rep.range_ok = phi_min >= -tol && phi_max <= inst.omega() + tol;

    if (!rep.start_point_ok) detail << "X(0) != A; ";
    if (!rep.end_point_ok)
        detail << "X(L) misses B by " << distance(path.end_point(), inst.b()) << "; ";
    if (!rep.start_tangent_ok) detail << "X'(0) != alpha; ";
    if (!rep.end_tangent_ok) detail << "X'(L) != beta; ";
    if (!rep.total_turning_ok) detail << "total turning != omega; ";
    if (!rep.range_ok) detail << "phi leaves [0, omega]; ";
    rep.detail = detail.str();
    return rep;
}

bool half_plane_check(const PiecewisePath& path, int n, double tol) {
    const auto pts = sample_path(path, n);
    for (const auto& at : pts) {
        // Inner normal: tangent rotated by +pi/2. phi is relative to the
        // initial tangent, so rebuild the absolute direction.
        const double ang = path.start_angle() + at.phi;
        const Point2 normal{-std::sin(ang), std::cos(ang)};
        for (const auto& other : pts) {
            if ((other.position - at.position).dot(normal) < -tol) return false;
        }
    }
    return true;
}

}  // namespace cornercurves
