#include "cornercurves/discrete.hpp"

#include <algorithm>
#include <cmath>

namespace cornercurves {

namespace {

using Complex = std::complex<double>;

// Chord-to-arc ratio sin(t/2)/(t/2) e^{i t/2}, continued by 1 at t = 0.
Complex sinc_factor(double theta) {
    if (theta == 0.0) return {1.0, 0.0};
    const double h = theta / 2.0;
    return std::polar(std::sin(h) / h, h);
}

}  // namespace

double DiscreteArcChain::length() const {
    double sum = 0.0;
    for (double r : radii) sum += r;
    return theta0 * sum;
}

double DiscreteArcChain::min_radius() const {
    return *std::min_element(radii.begin(), radii.end());
}

DiscreteArcChain make_chain(const ProblemInstance& inst, std::vector<double> radii) {
    if (radii.size() < 2)
        throw Error(Errc::InvalidArgument, "a chain needs at least two arcs");
    for (double r : radii) {
        if (!std::isfinite(r) || r < 0.0)
            throw Error(Errc::InvalidArgument, "chain radii must be finite and nonnegative");
    }
    DiscreteArcChain chain;
    chain.p = static_cast<int>(radii.size());
    chain.theta0 = inst.omega() / chain.p;
    chain.radii = std::move(radii);
    return chain;
}

std::complex<double> EndpointSystem::residual(std::span<const double> radii) const {
    Complex acc{-rhs_re, -rhs_im};
    for (size_t k = 0; k < radii.size(); ++k)
        acc += Complex{row_re[k], row_im[k]} * radii[k];
    return acc;
}

EndpointSystem assemble_endpoint_system(const ProblemInstance& inst, int p) {
    if (p < 2) throw Error(Errc::InvalidArgument, "endpoint system needs p >= 2");
    const double theta0 = inst.omega() / p;
    EndpointSystem sys;
    sys.row_re.resize(static_cast<size_t>(p));
    sys.row_im.resize(static_cast<size_t>(p));
    const Complex gain = Complex{0.0, 1.0} * (1.0 - std::polar(1.0, theta0));
    for (int k = 0; k < p; ++k) {
        const Complex col = gain * std::polar(1.0, k * theta0);
        sys.row_re[static_cast<size_t>(k)] = col.real();
        sys.row_im[static_cast<size_t>(k)] = col.imag();
    }
    const Point2 chord = inst.b() - inst.a();
    sys.rhs_re = chord.dot(inst.alpha().vec());
    sys.rhs_im = chord.dot(inst.k_hat().vec());
    return sys;
}

ChainEvaluation evaluate_arc_chain(std::span<const double> thetas,
                                   std::span<const double> lengths) {
    if (thetas.size() != lengths.size() || thetas.empty())
        throw Error(Errc::InvalidArgument, "thetas and lengths must be equal-length, nonempty");
    ChainEvaluation eval;
    double phi = 0.0;
    Complex endpoint{0.0, 0.0};
    for (size_t k = 0; k < thetas.size(); ++k) {
        if (thetas[k] < 0.0)
            throw Error(Errc::NegativeTurning, "turning angles must be nonnegative");
        if (!(lengths[k] >= 0.0))
            throw Error(Errc::InvalidArgument, "piece lengths must be nonnegative");
        endpoint += sinc_factor(thetas[k]) * std::polar(1.0, phi) * lengths[k];
        phi += thetas[k];
    }
    eval.endpoint = endpoint;
    eval.total_turning = phi;
    return eval;
}

PiecewisePath chain_to_path(const DiscreteArcChain& chain, const ProblemInstance& inst,
                            double closure_tol) {
    if (chain.p < 2) throw Error(Errc::InvalidArgument, "chain must have p >= 2");
    for (double r : chain.radii) {
        if (!(r > 0.0))
            throw Error(Errc::InvalidArgument,
                        "chain has a nonpositive radius; not an admissible curve");
    }

    std::vector<PathPiece> pieces;
    pieces.reserve(chain.radii.size());
    Point2 at = inst.a();
    double heading = inst.alpha().angle();
    for (double r : chain.radii) {
        const Point2 dir{std::cos(heading), std::sin(heading)};
        ArcPiece arc{at + dir.rot90() * r, r, heading - M_PI / 2.0, chain.theta0};
        at = arc.end();
        heading += chain.theta0;
        pieces.emplace_back(arc);
    }

    const double closure = distance(at, inst.b());
    if (closure > closure_tol)
        throw Error(Errc::EndpointMismatch,
                    "chain misses B by " + std::to_string(closure));
    return PiecewisePath(std::move(pieces));
}

DiscreteArcChain refine_chain(const DiscreteArcChain& chain) {
    DiscreteArcChain out;
    out.p = 2 * chain.p;
    out.theta0 = chain.theta0 / 2.0;
    out.radii.reserve(chain.radii.size() * 2);
    for (double r : chain.radii) {
        out.radii.push_back(r);
        out.radii.push_back(r);
    }
    return out;
}

}  // namespace cornercurves
