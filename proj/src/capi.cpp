#include "cornercurves.h"

#include <cstring>
#include <string>

#include "cornercurves/curves.hpp"
#include "cornercurves/discrete.hpp"
#include "cornercurves/exact.hpp"
#include "cornercurves/geometry.hpp"
#include "cornercurves/io.hpp"
#include "cornercurves/lp.hpp"

using namespace cornercurves;

struct cc_instance {
    ProblemInstance inst;
};
struct cc_path {
    PiecewisePath path;
};
struct cc_chain {
    DiscreteArcChain chain;
};

namespace {

thread_local std::string g_last_error;

cc_status status_of(Errc code) {
    switch (code) {
        case Errc::InvalidArgument: return CC_ERROR_INVALID_ARGUMENT;
        case Errc::ParallelTangents: return CC_ERROR_PARALLEL_TANGENTS;
        case Errc::DegenerateCorner: return CC_ERROR_DEGENERATE_CORNER;
        case Errc::InfeasibleGeometry: return CC_ERROR_INFEASIBLE_GEOMETRY;
        case Errc::NonPositiveBTilde: return CC_ERROR_NONPOSITIVE_B_TILDE;
        case Errc::RadiusTooLarge: return CC_ERROR_RADIUS_TOO_LARGE;
        case Errc::NegativeTurning: return CC_ERROR_NEGATIVE_TURNING;
        case Errc::EndpointMismatch: return CC_ERROR_ENDPOINT_MISMATCH;
        case Errc::DiscreteInfeasible: return CC_ERROR_DISCRETE_INFEASIBLE;
        case Errc::NumericalBreakdown: return CC_ERROR_NUMERICAL_BREAKDOWN;
        case Errc::IoFailure: return CC_ERROR_IO;
    }
    return CC_ERROR_UNKNOWN;
}

cc_status fail_arg(const char* what) {
    g_last_error = what;
    return CC_ERROR_INVALID_ARGUMENT;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
cc_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return CC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CC_ERROR_UNKNOWN;
    } catch (...) {
        g_last_error = "unknown failure";
        return CC_ERROR_UNKNOWN;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void write_point(double out[2], Point2 p) {
    out[0] = p.x;
    out[1] = p.y;
}

}  // namespace

extern "C" {

const char* cc_status_name(cc_status status) {
    switch (status) {
        case CC_OK: return "CC_OK";
        case CC_ERROR_INVALID_ARGUMENT: return "InvalidArgument";
        case CC_ERROR_PARALLEL_TANGENTS: return "ParallelTangents";
        case CC_ERROR_DEGENERATE_CORNER: return "DegenerateCorner";
        case CC_ERROR_INFEASIBLE_GEOMETRY: return "InfeasibleGeometry";
        case CC_ERROR_NONPOSITIVE_B_TILDE: return "NonPositiveBTilde";
        case CC_ERROR_RADIUS_TOO_LARGE: return "RadiusTooLarge";
        case CC_ERROR_NEGATIVE_TURNING: return "NegativeTurning";
        case CC_ERROR_ENDPOINT_MISMATCH: return "EndpointMismatch";
        case CC_ERROR_DISCRETE_INFEASIBLE: return "DiscreteInfeasible";
        case CC_ERROR_NUMERICAL_BREAKDOWN: return "NumericalBreakdown";
        case CC_ERROR_IO: return "IoFailure";
        case CC_ERROR_UNKNOWN: return "UnknownError";
    }
    return "UnknownError";
}

const char* cc_last_error_message(void) { return g_last_error.c_str(); }

cc_status cc_instance_create(const double a[2], const double b[2], const double alpha[2],
                             const double beta[2], const double* corner, cc_instance** out) {
    if (!a || !b || !alpha || !beta || !out) return fail_arg("null argument");
    return guarded([&] {
        std::optional<Point2> hint;
        if (corner) hint = Point2{corner[0], corner[1]};
        *out = new cc_instance{normalize_problem(Point2{a[0], a[1]}, Point2{b[0], b[1]},
                                                 UnitVec2::of(Point2{alpha[0], alpha[1]}),
                                                 UnitVec2::of(Point2{beta[0], beta[1]}), hint)};
    });
}

cc_status cc_instance_parse_json(const char* json_text, cc_instance** out) {
    if (!json_text || !out) return fail_arg("null argument");
    return guarded([&] { *out = new cc_instance{instance_from_json(json_text)}; });
}

void cc_instance_free(cc_instance* inst) { delete inst; }

cc_status cc_instance_get(const cc_instance* inst, double a[2], double b[2], double corner[2],
                          double alpha[2], double beta[2], double* omega, int* flipped) {
    if (!inst) return fail_arg("null instance");
    return guarded([&] {
        if (a) write_point(a, inst->inst.a());
        if (b) write_point(b, inst->inst.b());
        if (corner) write_point(corner, inst->inst.corner());
        if (alpha) write_point(alpha, inst->inst.alpha().vec());
        if (beta) write_point(beta, inst->inst.beta().vec());
        if (omega) *omega = inst->inst.omega();
        if (flipped) *flipped = inst->inst.flipped() ? 1 : 0;
    });
}

cc_status cc_instance_feasibility(const cc_instance* inst, double* u0, double* v0,
                                  int* feasible) {
    if (!inst) return fail_arg("null instance");
    return guarded([&] {
        const FeasibilityReport rep = feasibility_check(inst->inst);
        if (u0) *u0 = rep.u0;
        if (v0) *v0 = rep.v0;
        if (feasible) *feasible = rep.feasible ? 1 : 0;
    });
}

cc_status cc_instance_bounds(const cc_instance* inst, double* mu, double* nu, double* delta,
                             double* b_tilde) {
    if (!inst) return fail_arg("null instance");
    return guarded([&] {
        const BoundsReport rep = length_bounds(inst->inst);
        if (mu) *mu = rep.mu;
        if (nu) *nu = rep.nu;
        if (delta) *delta = rep.delta;
        if (b_tilde) *b_tilde = rep.b_tilde;
    });
}

cc_status cc_exact_radius(const cc_instance* inst, double* r_a) {
    if (!inst || !r_a) return fail_arg("null argument");
    return guarded([&] { *r_a = compute_ra(inst->inst); });
}

cc_status cc_exact_solve(const cc_instance* inst, cc_path** path, double* r_a, int* case_tag,
                         double* segment_length) {
    if (!inst || !path) return fail_arg("null argument");
    return guarded([&] {
        ExactSolution sol = build_arc_segment(inst->inst);
        if (r_a) *r_a = sol.r_a;
        if (case_tag) *case_tag = static_cast<int>(sol.case_tag);
        if (segment_length) *segment_length = sol.segment_length;
        *path = new cc_path{std::move(sol.path)};
    });
}

cc_status cc_dubins_path(const cc_instance* inst, double radius, cc_path** out) {
    if (!inst || !out) return fail_arg("null argument");
    return guarded([&] { *out = new cc_path{build_dubins(inst->inst, radius)}; });
}

cc_status cc_parabola_min_radius(const cc_instance* inst, double* min_radius, double* t_min) {
    if (!inst) return fail_arg("null instance");
    return guarded([&] {
        const ParabolaBaseline par = baseline_parabola(inst->inst);
        if (min_radius) *min_radius = par.min_radius;
        if (t_min) *t_min = par.t_min;
    });
}

cc_status cc_parabola_samples(const cc_instance* inst, int n, double* xs, double* ys, double* s,
                              double* phi, double* curvature) {
    if (!inst || !xs || !ys) return fail_arg("null argument");
    if (n < 2) return fail_arg("need at least two samples");
    return guarded([&] {
        const ParabolaBaseline par = baseline_parabola(inst->inst);
        const auto pts = sample_parabola(par, inst->inst, n);
        for (int i = 0; i < n; ++i) {
            const auto& p = pts[static_cast<size_t>(i)];
            xs[i] = p.position.x;
            ys[i] = p.position.y;
            if (s) s[i] = p.s;
            if (phi) phi[i] = p.phi;
            if (curvature) curvature[i] = p.curvature;
        }
    });
}

cc_status cc_parabola_svg(const cc_instance* inst, char** out_text) {
    if (!inst || !out_text) return fail_arg("null argument");
    return guarded([&] {
        const ParabolaBaseline par = baseline_parabola(inst->inst);
        const auto pts = sample_parabola(par, inst->inst, 256);
        std::vector<Point2> poly;
        poly.reserve(pts.size());
        for (const auto& cp : pts) poly.push_back(cp.position);
        *out_text = dup_string(svg_document({SvgCurve{"baseline", nullptr, std::move(poly)}}));
    });
}

cc_status cc_maxmin_chain(const cc_instance* inst, int p, cc_chain** out) {
    if (!inst || !out) return fail_arg("null argument");
    return guarded([&] { *out = new cc_chain{solve_maxmin(inst->inst, p)}; });
}

cc_status cc_minlength_chain(const cc_instance* inst, int p, double r_min, cc_chain** out) {
    if (!inst || !out) return fail_arg("null argument");
    return guarded([&] { *out = new cc_chain{solve_minlength(inst->inst, p, r_min)}; });
}

cc_status cc_chain_size(const cc_chain* chain, int* p) {
    if (!chain || !p) return fail_arg("null argument");
    *p = chain->chain.p;
    return CC_OK;
}

cc_status cc_chain_theta0(const cc_chain* chain, double* theta0) {
    if (!chain || !theta0) return fail_arg("null argument");
    *theta0 = chain->chain.theta0;
    return CC_OK;
}

cc_status cc_chain_radii(const cc_chain* chain, double* radii) {
    if (!chain || !radii) return fail_arg("null argument");
    for (int k = 0; k < chain->chain.p; ++k) radii[k] = chain->chain.radii[static_cast<size_t>(k)];
    return CC_OK;
}

cc_status cc_chain_min_radius(const cc_chain* chain, double* min_radius) {
    if (!chain || !min_radius) return fail_arg("null argument");
    *min_radius = chain->chain.min_radius();
    return CC_OK;
}

cc_status cc_chain_length(const cc_chain* chain, double* length) {
    if (!chain || !length) return fail_arg("null argument");
    *length = chain->chain.length();
    return CC_OK;
}

cc_status cc_chain_csv(const cc_chain* chain, char** out_text) {
    if (!chain || !out_text) return fail_arg("null argument");
    return guarded([&] { *out_text = dup_string(chain_csv(chain->chain)); });
}

cc_status cc_chain_path(const cc_chain* chain, const cc_instance* inst, cc_path** out) {
    if (!chain || !inst || !out) return fail_arg("null argument");
    return guarded([&] { *out = new cc_path{chain_to_path(chain->chain, inst->inst)}; });
}

void cc_chain_free(cc_chain* chain) { delete chain; }

cc_status cc_path_piece_count(const cc_path* path, int* count) {
    if (!path || !count) return fail_arg("null argument");
    *count = static_cast<int>(path->path.pieces().size());
    return CC_OK;
}

cc_status cc_path_length(const cc_path* path, double* length) {
    if (!path || !length) return fail_arg("null argument");
    *length = path->path.total_length();
    return CC_OK;
}

cc_status cc_path_min_radius(const cc_path* path, double* min_radius) {
    if (!path || !min_radius) return fail_arg("null argument");
    *min_radius = curvature_profile(path->path).min_radius;
    return CC_OK;
}

cc_status cc_path_total_turning(const cc_path* path, double* turning) {
    if (!path || !turning) return fail_arg("null argument");
    *turning = path->path.total_turning();
    return CC_OK;
}

cc_status cc_path_sample(const cc_path* path, int n, double* s, double* x, double* y,
                         double* phi, double* curvature) {
    if (!path) return fail_arg("null path");
    if (n < 2) return fail_arg("need at least two samples");
    return guarded([&] {
        const auto pts = sample_path(path->path, n);
        for (int i = 0; i < n; ++i) {
            const auto& p = pts[static_cast<size_t>(i)];
            if (s) s[i] = p.s;
            if (x) x[i] = p.position.x;
            if (y) y[i] = p.position.y;
            if (phi) phi[i] = p.phi;
            if (curvature) curvature[i] = p.curvature;
        }
    });
}

cc_status cc_path_validate(const cc_path* path, const cc_instance* inst, double tol,
                           int* passed, char** detail) {
    if (!path || !inst || !passed) return fail_arg("null argument");
    return guarded([&] {
        const ValidationReport rep = validate_membership(path->path, inst->inst, tol);
        *passed = rep.pass() ? 1 : 0;
        if (detail) *detail = dup_string(rep.detail);
    });
}

cc_status cc_path_csv(const cc_path* path, int n, int reverse_orientation, char** out_text) {
    if (!path || !out_text) return fail_arg("null argument");
    return guarded(
        [&] { *out_text = dup_string(path_csv(path->path, n, reverse_orientation != 0)); });
}

cc_status cc_path_svg(const cc_path* path, char** out_text) {
    if (!path || !out_text) return fail_arg("null argument");
    return guarded([&] { *out_text = dup_string(path_svg(path->path)); });
}

void cc_path_free(cc_path* path) { delete path; }

cc_status cc_overlay_svg(const cc_instance* inst, int p, char** out_text) {
    if (!inst || !out_text) return fail_arg("null argument");
    return guarded([&] {
        ExactSolution sol = build_arc_segment(inst->inst);
        const DiscreteArcChain chain = solve_maxmin(inst->inst, p);
        const PiecewisePath chain_path = chain_to_path(chain, inst->inst);
        const ParabolaBaseline par = baseline_parabola(inst->inst);
        const auto par_pts = sample_parabola(par, inst->inst, 256);
        std::vector<Point2> poly;
        poly.reserve(par_pts.size());
        for (const auto& cp : par_pts) poly.push_back(cp.position);

        const std::vector<SvgCurve> curves = {
            SvgCurve{"exact", &sol.path, {}},
            SvgCurve{"discrete", &chain_path, {}},
            SvgCurve{"baseline", nullptr, std::move(poly)},
        };
        *out_text = dup_string(svg_document(curves));
    });
}

void cc_string_free(char* text) { delete[] text; }

}  // extern "C"
