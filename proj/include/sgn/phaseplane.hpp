#ifndef SGN_PHASEPLANE_HPP
#define SGN_PHASEPLANE_HPP

#include <utility>

#include "sgn/closure.hpp"

namespace sgn::phaseplane {

enum class Regime { Oscillatory, Regularized };

/// Real/imaginary split of one eigenvalue.
struct Eigenvalue {
    double re;
    double im;
};

/// The pair lambda_+/lambda_- of the linearization at an equilibrium depth.
struct EigenPair {
    Eigenvalue plus;
    Eigenvalue minus;
};

/// Closure constants plus the derived spectral data of the reduced system
///
///     z' = v,   v' = -(3/K1^2) F(e^z) - (3c/K1^2) v.
struct PhaseParams {
    closure::ClosureData cd;
    double zeta_bar;      ///< upper depth bound (K1/zeta_l)^2
    double zeta_c;        ///< inflection depth, unique root of P in (zeta_l, zeta_r)
    double threshold_c2;  ///< critical squared damping (4/3) K1^2 F'(zeta_r) zeta_r
};

PhaseParams make_phase_params(const closure::ClosureData& cd);

/// F in the factorized triple-product form.
/// F(zeta) = (zeta - zeta_l)(zeta - zeta_r)(zeta + zeta_l + zeta_r) / (2 zeta^2)
double f_eval(double zeta, const PhaseParams& p);

/// F in the unfactored rational form zeta/2 + (K1/zeta)^2 - (K2 - s K1)/zeta.
/// Kept as a cross-check route; agrees with f_eval to round-off.
double f_unfactored(double zeta, const PhaseParams& p);

/// F'(zeta) = (zeta^3 + a zeta - 4 K1^2) / (2 zeta^3),  a = (2 K1^2 + zeta_l^3)/zeta_l
double f_prime(double zeta, const PhaseParams& p);

/// F''(zeta) = -(2 K1^2 (zeta - 3 zeta_l) + zeta zeta_l^3) / (zeta^4 zeta_l)
double f_second(double zeta, const PhaseParams& p);

/// Potential of the Liapunov function, normalized so Phi(z_l) = 0:
/// Phi(z) = -(3/K1^2) (zeta - zeta_l)^2 (K1^2 - zeta zeta_l^2) / (2 zeta^2 zeta_l^2)
double potential(double z, const PhaseParams& p);

/// Unique root of P(zeta) = zeta^3 + a zeta - b in (zeta_l, zeta_r), b = 4 K1^2.
/// Safeguarded Newton/bisection; |P(root)| < 1e-10.
double inflection_zeta_c(const PhaseParams& p);

/// Same root through the nested-radical closed form; cross-check only,
/// cancels badly for small a.
double inflection_zeta_c_closed_form(const PhaseParams& p);

/// Eigenvalues of the Jacobian at an equilibrium depth (zeta_l or zeta_r):
/// lambda_{+-} = -(3c/2K1^2) [1 +- sqrt(1 - (4K1^2/3c^2) F'(zeta*) zeta*)],
/// complex square root when the radicand is negative.  The Hamiltonian case
/// c = 0 uses the limit lambda^2 = -(3/K1^2) F'(zeta*) zeta*.
EigenPair eigenvalues_at(double zeta_star, const PhaseParams& p);

/// Oscillatory iff c^2 < threshold; equality classifies as Regularized.
Regime classify(const PhaseParams& p);

/// (zeta_r, (K1/zeta_l)^2): the amplitude range of dissipative-dispersive
/// shock waves with this closure.
std::pair<double, double> amplitude_bounds(const PhaseParams& p);

} // namespace sgn::phaseplane

#endif
