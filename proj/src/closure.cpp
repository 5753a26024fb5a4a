#include "sgn/closure.hpp"

#include <cmath>
#include <string>

namespace sgn::closure {

namespace {

void require_positive_depth(const State& s, const char* which) {
    if (!(s.zeta > 0.0))
        throw std::domain_error(std::string(which) + ": depth must be positive, got " +
                                std::to_string(s.zeta));
}

} // namespace

std::pair<double, double> k_constants(const State& left, double s) {
    require_positive_depth(left, "k_constants");
    const double k1 = -s * left.zeta + left.w;
    const double k2 = -s * left.w + 0.5 * left.zeta * left.zeta + left.w * left.w / left.zeta;
    return {k1, k2};
}

double lax_speed_lower_bound(const State& left) {
    require_positive_depth(left, "lax_speed_lower_bound");
    return left.w / left.zeta + std::sqrt(left.zeta);
}

State right_state(const State& left, double s) {
    require_positive_depth(left, "right_state");
    if (!(s > lax_speed_lower_bound(left)))
        throw InadmissibleSpeedError("right_state: speed " + std::to_string(s) +
                                     " is at or below the Lax bound " +
                                     std::to_string(lax_speed_lower_bound(left)));
    const double zl = left.zeta;
    const double k1 = -s * zl + left.w;
    const double disc = (8.0 * k1 * k1 + zl * zl * zl) / zl;
    const double root = std::sqrt(disc);
    const double zr = -0.5 * zl + 0.5 * root;
    const double wr = 0.5 * (2.0 * left.w - 3.0 * s * zl) + 0.5 * s * root;
    return {zr, wr};
}

std::pair<double, double> rh_residual(const State& left, const State& right, double s) {
    require_positive_depth(left, "rh_residual");
    require_positive_depth(right, "rh_residual");
    if (left.zeta == right.zeta || left.w == right.w)
        throw DegenerateJumpError("rh_residual: zero jump in depth or momentum");
    const double r1 = s - (left.w - right.w) / (left.zeta - right.zeta);
    const double flux = 0.5 * left.zeta * left.zeta - 0.5 * right.zeta * right.zeta +
                        left.w * left.w / left.zeta - right.w * right.w / right.zeta;
    const double r2 = s - flux / (left.w - right.w);
    return {r1, r2};
}

bool lax_check(const ClosureData& data) {
    const double lower = data.left.w / data.left.zeta + std::sqrt(data.left.zeta);
    const double upper = data.right.w / data.right.zeta + std::sqrt(data.right.zeta);
    return lower < data.s && data.s < upper;
}

ClosureData make_closure(const State& left, double s, double eps, double delta,
                         bool allow_nonlax) {
    require_positive_depth(left, "make_closure");
    if (!(delta > 0.0))
        throw std::domain_error("make_closure: delta must be positive");
    if (!(eps >= 0.0 && eps < 1.0))
        throw std::domain_error("make_closure: eps must lie in [0, 1)");

    ClosureData cd;
    cd.s = s;
    cd.left = left;
    if (allow_nonlax && !(s > lax_speed_lower_bound(left))) {
        // Non-Lax closures are only meaningful for the w_l = 0 family where
        // K1 = -s holds regardless of admissibility; the right state keeps
        // the closed form, which may then collapse onto the left state.
        const double zl = left.zeta;
        const double k1 = -s * zl + left.w;
        const double disc = (8.0 * k1 * k1 + zl * zl * zl) / zl;
        const double root = std::sqrt(disc);
        cd.right = {-0.5 * zl + 0.5 * root, 0.5 * (2.0 * left.w - 3.0 * s * zl) + 0.5 * s * root};
    } else {
        cd.right = right_state(left, s);
    }
    const auto [k1, k2] = k_constants(left, s);
    cd.k1 = k1;
    cd.k2 = k2;
    cd.eps = eps;
    cd.delta = delta;
    cd.c = s * eps / std::sqrt(delta);
    return cd;
}

} // namespace sgn::closure
