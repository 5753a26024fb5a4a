#ifndef SGN_TWSOLVE_HPP
#define SGN_TWSOLVE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sgn/phaseplane.hpp"

namespace sgn::twsolve {

using phaseplane::PhaseParams;
using phaseplane::Regime;

/// A point of the reduced dynamical system: z = ln(zeta), v = z'.
struct PhasePoint {
    double z;
    double v;
};

/// One refined extremum of the depth along the orbit.
struct Extremum {
    double xi;
    double zeta;
};

struct ProfileOptions {
    double eta = 1e-6;       ///< launch offset along the unstable eigenvector
    double abs_tol = 1e-10;  ///< integrator absolute tolerance
    double rel_tol = 1e-10;  ///< integrator relative tolerance
    double term_tol = 1e-8;  ///< termination: |z - z_r| + |v| below this, sustained
    double xi_span = 600.0;  ///< hard cap on the integration interval
    double dxi = 0.005;      ///< uniform output spacing
};

/// A sampled traveling-wave orbit with its structural metadata.
struct Profile {
    std::vector<double> xi;        ///< uniform sample abscissae
    std::vector<double> z;         ///< log-depth samples
    std::vector<double> v;         ///< slope samples z'
    std::vector<double> zeta;      ///< depth samples e^z
    std::vector<double> liapunov;  ///< V = v^2/2 + Phi(z) per sample
    std::vector<Extremum> maxima;  ///< sequence chi_i, values above zeta_r
    std::vector<Extremum> minima;  ///< sequence omega_i, values in (zeta_l, zeta_r)
    std::optional<double> inflection_xi;
    Regime regime;
    bool converged = false;        ///< reached the terminal equilibrium inside xi_span
};

/// Right-hand side of z' = v, v' = -(3/K1^2) F(e^z) - (3c/K1^2) v.
PhasePoint vector_field(const PhasePoint& p, const PhaseParams& params);

/// Shooting integration from the saddle's outgoing manifold.
///
/// Launches at (z_l + eta, lambda_-^l eta) where lambda_-^l is the positive
/// saddle eigenvalue, integrates with an adaptive RK5(4) pair, and samples
/// uniformly.  eta = 0 returns the constant equilibrium solution.  Throws
/// IntegrationDivergedError when the depth leaves (zeta_l, (K1/zeta_l)^2)
/// beyond tolerance.
Profile integrate_profile(const PhaseParams& params, const ProfileOptions& opts = {});

/// Extrema by sign changes of v with local quadratic refinement.
std::pair<std::vector<Extremum>, std::vector<Extremum>>
extrema_sequence(const Profile& profile, const PhaseParams& params);

/// The unique inflection point of a regularized profile.
///
/// Returns nullopt for a constant profile.  Throws StructureViolationError
/// for an oscillatory profile or when the sign-change count is not one.
std::optional<double> check_inflection(const Profile& profile, const PhaseParams& params);

/// True when every sample lies inside the trapping triangle
/// { v >= 0, z >= z_l, v <= m (z - z_r) } with m = lambda_-^r, up to tol.
bool trapping_check(const Profile& profile, const PhaseParams& params, double tol = 1e-9);

/// V(xi) = v^2/2 + Phi(z) along the profile.
std::vector<double> liapunov_series(const Profile& profile, const PhaseParams& params);

/// Least-squares decay rate of ln(zeta(chi_i) - zeta_r) over the late maxima;
/// compares against Re(lambda_+^r) in the oscillatory tail tests.
/// Returns nullopt when fewer than 3 maxima fall inside the fit window.
std::optional<double> tail_decay_rate(const Profile& profile, const PhaseParams& params,
                                      double excess_floor = 1e-7);

} // namespace sgn::twsolve

#endif
