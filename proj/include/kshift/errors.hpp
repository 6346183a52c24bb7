#pragma once

#include <stdexcept>
#include <string>

namespace kshift {

enum class errc {
    non_interior,
    singular,
    non_positive_radius,
    amplitude_too_small,
    out_of_sector,
    bad_angle,
    point_not_in_domain,
    ray_not_contained,
    radius_too_small,
    budget_exceeded,
    eta_out_of_range,
    precondition_failed,
    zero_height,
    index_out_of_range,
    too_few_steps,
    bad_partition,
    out_of_domain,
    branch_violation,
    omega_not_in_half_plane,
    invalid_argument,
    parse_error,
    validation_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_interior: return "NonInterior";
        case errc::singular: return "Singular";
        case errc::non_positive_radius: return "NonPositiveRadius";
        case errc::amplitude_too_small: return "AmplitudeTooSmall";
        case errc::out_of_sector: return "OutOfSector";
        case errc::bad_angle: return "BadAngle";
        case errc::point_not_in_domain: return "PointNotInDomain";
        case errc::ray_not_contained: return "RayNotContained";
        case errc::radius_too_small: return "RadiusTooSmall";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::eta_out_of_range: return "EtaOutOfRange";
        case errc::precondition_failed: return "PreconditionFailed";
        case errc::zero_height: return "ZeroHeight";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::too_few_steps: return "TooFewSteps";
        case errc::bad_partition: return "BadPartition";
        case errc::out_of_domain: return "OutOfDomain";
        case errc::branch_violation: return "BranchViolation";
        case errc::omega_not_in_half_plane: return "OmegaNotInHalfPlane";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::parse_error: return "ParseError";
        case errc::validation_error: return "ValidationError";
    }
    return "UnknownError";
}

/// Exception carrying a machine-readable error code.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw error(code, what);
}

}  // namespace kshift
