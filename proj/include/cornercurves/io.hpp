#pragma once

#include <string>
#include <vector>

#include "cornercurves/curves.hpp"
#include "cornercurves/discrete.hpp"
#include "cornercurves/geometry.hpp"

namespace cornercurves {

/// Builds a normalized instance from a JSON document of the form
///   {"A":[x,y], "B":[x,y], "alpha":[dx,dy], "beta":[dx,dy], "O":[x,y]?}
/// Tangent vectors are renormalized to unit length to absorb decimal
/// rounding. Throws IoFailure on malformed input.
ProblemInstance instance_from_json(const std::string& text);

/// Round-trip-safe decimal rendering of a double (%.17g).
std::string format_double(double v);

/// Sample CSV with header `s,x,y,phi,curvature`, one row per sample. With
/// `reverse_orientation` the rows present the curve traversed from the far
/// end, for instances that were flipped during normalization.
std::string path_csv(const PiecewisePath& path, int samples, bool reverse_orientation = false);

std::string samples_csv(const std::vector<CurvePoint>& samples);

/// Chain CSV with header `k,theta0,R_k,L_k`.
std::string chain_csv(const DiscreteArcChain& chain);

/// A named curve of an SVG figure; either exact arc/line commands from a
/// path, or a sampled polyline.
struct SvgCurve {
    std::string css_class;
    const PiecewisePath* path = nullptr;  // used when non-null
    std::vector<Point2> polyline;         // used otherwise
};

/// Standalone SVG document: one `path` element per curve, viewBox fitted to
/// the union of the curves with a 5% margin, 1px strokes. Arcs are emitted as
/// elliptical-arc commands with equal radii.
std::string svg_document(const std::vector<SvgCurve>& curves);

std::string path_svg(const PiecewisePath& path);

}  // namespace cornercurves
