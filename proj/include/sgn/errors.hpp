#ifndef SGN_ERRORS_HPP
#define SGN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sgn {

/// Shock speed at or below the Lax admissibility bound.
struct InadmissibleSpeedError : std::domain_error {
    explicit InadmissibleSpeedError(const std::string& msg) : std::domain_error(msg) {}
};

/// Jump conditions requested for coinciding states.
struct DegenerateJumpError : std::domain_error {
    explicit DegenerateJumpError(const std::string& msg) : std::domain_error(msg) {}
};

/// Orbit left the invariant strip; closure or integration is broken.
struct IntegrationDivergedError : std::runtime_error {
    explicit IntegrationDivergedError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Profile violates a structural property guaranteed by the phase-plane analysis.
struct StructureViolationError : std::runtime_error {
    explicit StructureViolationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Depth fell below the cavitation floor during a simulation.
struct CavitationError : std::runtime_error {
    explicit CavitationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Velocity norm exploded; the run is meaningless past this point.
struct InstabilityError : std::runtime_error {
    explicit InstabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Requested diagnostic does not apply to the given data (e.g. width of a
/// monotone profile).
struct NotApplicableError : std::runtime_error {
    explicit NotApplicableError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sgn

#endif
