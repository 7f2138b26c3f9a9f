#ifndef CORNERCURVES_H
#define CORNERCURVES_H

/* C interface to the cornercurves shared library.
 *
 * Given two endpoints with prescribed tangent directions meeting at a corner,
 * the library builds planar curves of nonnegative curvature connecting them:
 * the exact arc+segment curve that maximizes the minimum radius of curvature,
 * the bounded-curvature (Dubins) family below that radius, a quadratic-Bezier
 * baseline, and equal-angle arc chains optimized by linear programming.
 *
 * Every function returns a cc_status; CC_OK means success. On failure the
 * output arguments are untouched and cc_last_error_message() describes the
 * problem for the calling thread. Objects returned through out-parameters are
 * owned by the caller and released with the matching *_free function.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
    CC_OK = 0,
    CC_ERROR_INVALID_ARGUMENT,
    CC_ERROR_PARALLEL_TANGENTS,
    CC_ERROR_DEGENERATE_CORNER,
    CC_ERROR_INFEASIBLE_GEOMETRY,
    CC_ERROR_NONPOSITIVE_B_TILDE,
    CC_ERROR_RADIUS_TOO_LARGE,
    CC_ERROR_NEGATIVE_TURNING,
    CC_ERROR_ENDPOINT_MISMATCH,
    CC_ERROR_DISCRETE_INFEASIBLE,
    CC_ERROR_NUMERICAL_BREAKDOWN,
    CC_ERROR_IO,
    CC_ERROR_UNKNOWN
} cc_status;

const char* cc_status_name(cc_status status);

/* Message for the most recent failure on this thread; empty string if none. */
const char* cc_last_error_message(void);

/* Opaque handles. */
typedef struct cc_instance cc_instance;
typedef struct cc_path cc_path;
typedef struct cc_chain cc_chain;

/* ---- Problem instances ------------------------------------------------- */

/* Normalizes the corner problem given endpoints A, B and unit tangents
 * alpha (at A) and beta (at B). The corner is the tangent-line intersection;
 * pass corner != NULL to supply it explicitly (it must agree with the lines).
 * The instance is reoriented so the turning angle lies in (0, pi). */
cc_status cc_instance_create(const double a[2], const double b[2], const double alpha[2],
                             const double beta[2], const double* corner /* nullable, [2] */,
                             cc_instance** out);

/* Same, from a JSON document:
 * {"A":[x,y],"B":[x,y],"alpha":[dx,dy],"beta":[dx,dy],"O":[x,y]?} */
cc_status cc_instance_parse_json(const char* json_text, cc_instance** out);

void cc_instance_free(cc_instance* inst);

/* Normalized data. Any output pointer may be NULL to skip it. `flipped` is 1
 * when the input orientation was reversed during normalization. */
cc_status cc_instance_get(const cc_instance* inst, double a[2], double b[2], double corner[2],
                          double alpha[2], double beta[2], double* omega, int* flipped);

/* Signed tangent lengths u0, v0; feasible = 1 iff both are positive. */
cc_status cc_instance_feasibility(const cc_instance* inst, double* u0, double* v0,
                                  int* feasible);

/* Length bounds mu <= L <= nu and curvature floor delta = omega/nu. */
cc_status cc_instance_bounds(const cc_instance* inst, double* mu, double* nu, double* delta,
                             double* b_tilde);

/* ---- Exact constructions ----------------------------------------------- */

/* Largest admissible radius: min(|OA|,|OB|) * tan((pi - omega)/2). */
cc_status cc_exact_radius(const cc_instance* inst, double* r_a);

/* cc_exact_solve case tags. */
#define CC_CASE_SEGMENT_THEN_ARC 0
#define CC_CASE_ARC_THEN_SEGMENT 1
#define CC_CASE_PURE_ARC 2

/* The unique arc+segment curve realizing r_a. Out-params are optional except
 * the path. */
cc_status cc_exact_solve(const cc_instance* inst, cc_path** path, double* r_a, int* case_tag,
                         double* segment_length);

/* Bounded-curvature geodesic with both arc radii equal to `radius`; valid for
 * 0 < radius <= r_a, CC_ERROR_RADIUS_TOO_LARGE above. */
cc_status cc_dubins_path(const cc_instance* inst, double radius, cc_path** out);

/* Minimum curvature radius of the quadratic Bezier through A, O, B and the
 * parameter where it is attained. */
cc_status cc_parabola_min_radius(const cc_instance* inst, double* min_radius, double* t_min);

/* n samples of the baseline parabola: xs/ys (required, length n), and
 * optional s (running length), phi, curvature arrays. */
cc_status cc_parabola_samples(const cc_instance* inst, int n, double* xs, double* ys, double* s,
                              double* phi, double* curvature);

/* Standalone SVG document of the baseline parabola as a dense polyline. */
cc_status cc_parabola_svg(const cc_instance* inst, char** out_text);

/* ---- Discrete chains ---------------------------------------------------- */

/* Max-min chain: p equal-angle arcs maximizing the smallest radius. */
cc_status cc_maxmin_chain(const cc_instance* inst, int p, cc_chain** out);

/* Shortest chain with all radii >= r_min. */
cc_status cc_minlength_chain(const cc_instance* inst, int p, double r_min, cc_chain** out);

cc_status cc_chain_size(const cc_chain* chain, int* p);
cc_status cc_chain_theta0(const cc_chain* chain, double* theta0);
/* Copies the p radii into `radii`. */
cc_status cc_chain_radii(const cc_chain* chain, double* radii);
cc_status cc_chain_min_radius(const cc_chain* chain, double* min_radius);
cc_status cc_chain_length(const cc_chain* chain, double* length);
/* CSV rows `k,theta0,R_k,L_k`. Free with cc_string_free. */
cc_status cc_chain_csv(const cc_chain* chain, char** out_text);
/* Assembles the chain into a path starting at A; fails with
 * CC_ERROR_ENDPOINT_MISMATCH when it misses B by more than 1e-6. */
cc_status cc_chain_path(const cc_chain* chain, const cc_instance* inst, cc_path** out);
void cc_chain_free(cc_chain* chain);

/* ---- Paths -------------------------------------------------------------- */

cc_status cc_path_piece_count(const cc_path* path, int* count);
cc_status cc_path_length(const cc_path* path, double* length);
/* Smallest arc radius (HUGE_VAL for an all-line path) and total turning. */
cc_status cc_path_min_radius(const cc_path* path, double* min_radius);
cc_status cc_path_total_turning(const cc_path* path, double* turning);

/* n >= 2 samples at uniform arc length; any output array may be NULL. */
cc_status cc_path_sample(const cc_path* path, int n, double* s, double* x, double* y,
                         double* phi, double* curvature);

/* Admissibility check against the instance: endpoints, end tangents,
 * monotone tangent angle, total turning omega, angle range within [0,omega],
 * all within tol. `passed` is 1/0; `detail` (optional) receives a description
 * of the failing clauses, free with cc_string_free. */
cc_status cc_path_validate(const cc_path* path, const cc_instance* inst, double tol,
                           int* passed, char** detail);

/* CSV of n samples (header `s,x,y,phi,curvature`). reverse_orientation
 * presents the curve traversed from the far end, matching inputs that were
 * flipped during normalization. */
cc_status cc_path_csv(const cc_path* path, int n, int reverse_orientation, char** out_text);

/* Standalone SVG document with the path as line and arc commands. */
cc_status cc_path_svg(const cc_path* path, char** out_text);

void cc_path_free(cc_path* path);

/* SVG overlay of the exact curve, the max-min chain for the given p, and the
 * baseline parabola, with per-curve CSS classes. */
cc_status cc_overlay_svg(const cc_instance* inst, int p, char** out_text);

void cc_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* CORNERCURVES_H */
