#pragma once

#include <stdexcept>
#include <string>

namespace cornercurves {

/// Failure conditions surfaced by the library. Each maps 1:1 onto a status
/// code of the C API.
enum class Errc {
    InvalidArgument,
    ParallelTangents,    ///< end tangents have no usable corner (cross product ~ 0)
    DegenerateCorner,    ///< the corner coincides with an endpoint
    InfeasibleGeometry,  ///< no nonnegative-curvature curve fits this data
    NonPositiveBTilde,   ///< the half-angle frame puts B behind A
    RadiusTooLarge,      ///< requested radius exceeds the largest admissible one
    NegativeTurning,     ///< an arc chain was given a negative turning angle
    EndpointMismatch,    ///< a chain does not close on B within tolerance
    DiscreteInfeasible,  ///< the equal-angle LP has no nonnegative solution
    NumericalBreakdown,  ///< pivot or self-check fell below numerical tolerance
    IoFailure,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + std::move(message)),
          code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace cornercurves
