#pragma once

#include <complex>
#include <span>
#include <vector>

#include "cornercurves/curves.hpp"
#include "cornercurves/geometry.hpp"

namespace cornercurves {

/// Chain of p circular arcs sharing the turning angle theta0 = omega / p,
/// identified with its radius vector. Radii are allowed to touch zero so that
/// vertex solutions of the endpoint LP are representable; strict positivity
/// is what admissibility requires and chain_to_path enforces it.
struct DiscreteArcChain {
    int p = 0;
    double theta0 = 0.0;
    std::vector<double> radii;

    double length() const;       // theta0 * sum of radii
    double min_radius() const;
};

DiscreteArcChain make_chain(const ProblemInstance& inst, std::vector<double> radii);

/// Real form of the endpoint constraint on equal-angle chains. Column k holds
/// Re/Im of i(1 - e^{i theta0}) e^{i k theta0}; the right-hand side is the
/// affix of B - A in the frame (A, alpha, k_hat).
struct EndpointSystem {
    std::vector<double> row_re;
    std::vector<double> row_im;
    double rhs_re = 0.0;
    double rhs_im = 0.0;

    int p() const { return static_cast<int>(row_re.size()); }
    /// Residual (A R - b) for a radius vector.
    std::complex<double> residual(std::span<const double> radii) const;
};

EndpointSystem assemble_endpoint_system(const ProblemInstance& inst, int p);

/// Forward evaluation of a general arc chain in the frame (A, alpha, k_hat):
/// piece k turns by thetas[k] >= 0 over length lengths[k] >= 0, a zero
/// turning angle meaning a straight piece. Returns the endpoint affix
/// sum of gamma_k u_k L_k with gamma_k the chord-to-arc sinc factor, and the
/// total turning.
struct ChainEvaluation {
    std::complex<double> endpoint;
    double total_turning = 0.0;
};

ChainEvaluation evaluate_arc_chain(std::span<const double> thetas,
                                   std::span<const double> lengths);

/// Assembles the chain into consecutive arc pieces starting at A with tangent
/// alpha. Throws EndpointMismatch when the built path misses B by more than
/// closure_tol (loose by default to absorb LP termination error).
PiecewisePath chain_to_path(const DiscreteArcChain& chain, const ProblemInstance& inst,
                            double closure_tol = 1e-6);

/// Writes each arc of a p-chain as two arcs of the same radius, giving a
/// 2p-chain over theta0 / 2 that traces the identical curve.
DiscreteArcChain refine_chain(const DiscreteArcChain& chain);

}  // namespace cornercurves
