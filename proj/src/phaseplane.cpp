#include "sgn/phaseplane.hpp"

#include <cmath>
#include <string>

namespace sgn::phaseplane {

namespace {

void require_positive(double zeta) {
    if (!(zeta > 0.0))
        throw std::domain_error("phaseplane: depth must be positive, got " +
                                std::to_string(zeta));
}

// Coefficients of P(zeta) = zeta^3 + a zeta - b, the numerator of 2 zeta^3 F'.
struct Cubic {
    double a;
    double b;
};

Cubic p_coeffs(const closure::ClosureData& cd) {
    const double k12 = cd.k1 * cd.k1;
    const double zl = cd.left.zeta;
    return {(2.0 * k12 + zl * zl * zl) / zl, 4.0 * k12};
}

double p_eval(const Cubic& c, double zeta) { return zeta * zeta * zeta + c.a * zeta - c.b; }

// Safeguarded Newton with a bisection fallback on a sign-changing bracket.
double cubic_root_in(const Cubic& c, double lo, double hi) {
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double f = p_eval(c, x);
        if (std::abs(f) < 1e-13 * (1.0 + c.b)) return x;
        if (f > 0.0) hi = x; else lo = x;
        const double df = 3.0 * x * x + c.a;  // > 0, P is strictly increasing
        double step = x - f / df;
        x = (step > lo && step < hi) ? step : 0.5 * (lo + hi);
        if (hi - lo < 1e-15 * hi) break;
    }
    return x;
}

} // namespace

double f_eval(double zeta, const PhaseParams& p) {
    require_positive(zeta);
    const double zl = p.cd.left.zeta;
    const double zr = p.cd.right.zeta;
    return (zeta - zl) * (zeta - zr) * (zeta + zl + zr) / (2.0 * zeta * zeta);
}

double f_unfactored(double zeta, const PhaseParams& p) {
    require_positive(zeta);
    const double k1 = p.cd.k1;
    const double b = p.cd.k2 - p.cd.s * p.cd.k1;  // K2 - s K1 > 0
    return 0.5 * zeta + (k1 / zeta) * (k1 / zeta) - b / zeta;
}

double f_prime(double zeta, const PhaseParams& p) {
    require_positive(zeta);
    const auto c = p_coeffs(p.cd);
    return p_eval(c, zeta) / (2.0 * zeta * zeta * zeta);
}

double f_second(double zeta, const PhaseParams& p) {
    require_positive(zeta);
    const double k12 = p.cd.k1 * p.cd.k1;
    const double zl = p.cd.left.zeta;
    const double z4 = zeta * zeta * zeta * zeta;
    return -(2.0 * k12 * (zeta - 3.0 * zl) + zeta * zl * zl * zl) / (z4 * zl);
}

double potential(double z, const PhaseParams& p) {
    const double zeta = std::exp(z);
    const double zl = p.cd.left.zeta;
    const double k12 = p.cd.k1 * p.cd.k1;
    const double d = zeta - zl;
    return -(3.0 / k12) * d * d * (k12 - zeta * zl * zl) / (2.0 * zeta * zeta * zl * zl);
}

double inflection_zeta_c(const PhaseParams& p) {
    const auto c = p_coeffs(p.cd);
    return cubic_root_in(c, p.cd.left.zeta, p.cd.right.zeta);
}

double inflection_zeta_c_closed_form(const PhaseParams& p) {
    const auto c = p_coeffs(p.cd);
    const double t = 9.0 * c.b + std::sqrt(3.0 * (4.0 * c.a * c.a * c.a + 27.0 * c.b * c.b));
    const double ct = std::cbrt(t);
    return ct / std::cbrt(18.0) - std::cbrt(2.0 / 3.0) * c.a / ct;
}

EigenPair eigenvalues_at(double zeta_star, const PhaseParams& p) {
    require_positive(zeta_star);
    const double k12 = p.cd.k1 * p.cd.k1;
    const double fpz = f_prime(zeta_star, p) * zeta_star;
    const double c = p.cd.c;
    if (c == 0.0) {
        // Hamiltonian limit: lambda^2 = -(3/K1^2) F'(zeta*) zeta*
        const double q = -(3.0 / k12) * fpz;
        if (q >= 0.0) {
            const double r = std::sqrt(q);
            return {{r, 0.0}, {-r, 0.0}};
        }
        const double r = std::sqrt(-q);
        return {{0.0, r}, {0.0, -r}};
    }
    const double pre = -1.5 * c / k12;
    const double radicand = 1.0 - (4.0 * k12 / (3.0 * c * c)) * fpz;
    if (radicand >= 0.0) {
        const double r = std::sqrt(radicand);
        return {{pre * (1.0 + r), 0.0}, {pre * (1.0 - r), 0.0}};
    }
    const double r = std::sqrt(-radicand);
    return {{pre, pre * r}, {pre, -pre * r}};
}

Regime classify(const PhaseParams& p) {
    return (p.cd.c * p.cd.c < p.threshold_c2) ? Regime::Oscillatory : Regime::Regularized;
}

std::pair<double, double> amplitude_bounds(const PhaseParams& p) {
    return {p.cd.right.zeta, p.zeta_bar};
}

PhaseParams make_phase_params(const closure::ClosureData& cd) {
    PhaseParams p;
    p.cd = cd;
    const double ratio = cd.k1 / cd.left.zeta;
    p.zeta_bar = ratio * ratio;
    p.zeta_c = inflection_zeta_c(p);
    const double zr = cd.right.zeta;
    p.threshold_c2 = (4.0 / 3.0) * cd.k1 * cd.k1 * f_prime(zr, p) * zr;
    return p;
}

} // namespace sgn::phaseplane
