#include "cornercurves/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace cornercurves {

namespace {

Point2 read_point(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2 ||
        !j[key][0].is_number() || !j[key][1].is_number())
        throw Error(Errc::IoFailure,
                    std::string("instance JSON needs \"") + key + "\" as [x, y]");
    return Point2{j[key][0].get<double>(), j[key][1].get<double>()};
}

}  // namespace

ProblemInstance instance_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::IoFailure, std::string("invalid JSON: ") + e.what());
    }
    const Point2 a = read_point(j, "A");
    const Point2 b = read_point(j, "B");
    const UnitVec2 alpha = UnitVec2::of(read_point(j, "alpha"));
    const UnitVec2 beta = UnitVec2::of(read_point(j, "beta"));
    std::optional<Point2> corner;
    if (j.contains("O")) corner = read_point(j, "O");
    return normalize_problem(a, b, alpha, beta, corner);
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string samples_csv(const std::vector<CurvePoint>& samples) {
    std::ostringstream out;
    out << "s,x,y,phi,curvature\n";
    for (const auto& p : samples)
        out << format_double(p.s) << ',' << format_double(p.position.x) << ','
            << format_double(p.position.y) << ',' << format_double(p.phi) << ','
            << format_double(p.curvature) << '\n';
    return out.str();
}

std::string path_csv(const PiecewisePath& path, int samples, bool reverse_orientation) {
    std::vector<CurvePoint> pts = sample_path(path, samples);
    if (reverse_orientation) {
        // Same point set traversed the other way: s -> L - s and the tangent
        // angle is measured from the opposite end tangent.
        const double len = path.total_length();
        const double turn = pts.back().phi;
        std::reverse(pts.begin(), pts.end());
        for (auto& p : pts) {
            p.s = len - p.s;
            p.phi = turn - p.phi;
        }
    }
    return samples_csv(pts);
}

std::string chain_csv(const DiscreteArcChain& chain) {
    std::ostringstream out;
    out << "k,theta0,R_k,L_k\n";
    for (int k = 0; k < chain.p; ++k) {
        const double r = chain.radii[static_cast<size_t>(k)];
        out << k << ',' << format_double(chain.theta0) << ',' << format_double(r) << ','
            << format_double(r * chain.theta0) << '\n';
    }
    return out.str();
}

namespace {

struct Bounds {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool empty = true;
    void add(Point2 p) {
        if (empty) {
            xmin = xmax = p.x;
            ymin = ymax = p.y;
            empty = false;
            return;
        }
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
};

// SVG user space points y-down; flip the y axis so figures read like plots.
std::string svg_coord(Point2 p, double scale) {
    return format_double(p.x * scale) + " " + format_double(-p.y * scale);
}

std::string path_d(const PiecewisePath& path, double scale) {
    std::ostringstream d;
    d << "M " << svg_coord(path.start_point(), scale);
    for (const auto& piece : path.pieces()) {
        if (const auto* line = std::get_if<LinePiece>(&piece)) {
            d << " L " << svg_coord(line->end, scale);
        } else {
            const auto& arc = std::get<ArcPiece>(piece);
            const int large = std::abs(arc.sweep) > M_PI ? 1 : 0;
            // Counterclockwise in math coordinates is clockwise on screen.
            const int sweep_flag = arc.sweep > 0.0 ? 0 : 1;
            d << " A " << format_double(arc.radius * scale) << ' '
              << format_double(arc.radius * scale) << " 0 " << large << ' ' << sweep_flag
              << ' ' << svg_coord(arc.end(), scale);
        }
    }
    return d.str();
}

std::string polyline_d(const std::vector<Point2>& pts, double scale) {
    std::ostringstream d;
    d << "M " << svg_coord(pts.front(), scale);
    for (size_t i = 1; i < pts.size(); ++i) d << " L " << svg_coord(pts[i], scale);
    return d.str();
}

}  // namespace

std::string svg_document(const std::vector<SvgCurve>& curves) {
    if (curves.empty()) throw Error(Errc::InvalidArgument, "no curves to draw");

    Bounds box;
    for (const auto& c : curves) {
        if (c.path) {
            for (const auto& p : sample_path(*c.path, 256)) box.add(p.position);
        } else {
            if (c.polyline.size() < 2)
                throw Error(Errc::InvalidArgument, "polyline curve needs at least two points");
            for (const auto& p : c.polyline) box.add(p);
        }
    }
    const double span = std::max({box.xmax - box.xmin, box.ymax - box.ymin, 1e-12});
    const double scale = 800.0 / span;  // keeps 1px strokes legible

    const double w = (box.xmax - box.xmin) * scale;
    const double h = (box.ymax - box.ymin) * scale;
    const double mx = 0.05 * std::max(w, h), my = 0.05 * std::max(w, h);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
        << format_double(box.xmin * scale - mx) << ' ' << format_double(-box.ymax * scale - my)
        << ' ' << format_double(w + 2 * mx) << ' ' << format_double(h + 2 * my) << "\">\n";
    out << "  <style>path{fill:none;stroke-width:1}"
           ".path{stroke:#202020}.exact{stroke:#0072b2}"
           ".discrete{stroke:#009e73}.baseline{stroke:#cc79a7}"
           ".dubins{stroke:#d55e00}</style>\n";
    for (const auto& c : curves) {
        const std::string d = c.path ? path_d(*c.path, scale) : polyline_d(c.polyline, scale);
        out << "  <path class=\"" << c.css_class << "\" d=\"" << d << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string path_svg(const PiecewisePath& path) {
    return svg_document({SvgCurve{"path", &path, {}}});
}

}  // namespace cornercurves
