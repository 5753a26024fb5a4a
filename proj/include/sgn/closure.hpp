#ifndef SGN_CLOSURE_HPP
#define SGN_CLOSURE_HPP

#include <utility>

#include "sgn/errors.hpp"

namespace sgn::closure {

/// One side of a shock in the stretched traveling-wave frame:
/// depth zeta > 0 and momentum w.
struct State {
    double zeta;
    double w;
};

/// A fully determined Riemann-state closure.
///
/// Conventions are xi-frame throughout: `left` is the state ahead of the
/// front (xi -> -inf), `right` the state behind it (xi -> +inf), with
/// zeta_l < zeta_r and w_l < w_r for an admissible front shock.  The x-frame
/// relabeling (h_r = zeta_l etc.) is applied only at the reporting layer.
struct ClosureData {
    double s;      ///< shock speed, > 0
    State left;    ///< ahead state (zeta_l, w_l)
    State right;   ///< behind state (zeta_r, w_r)
    double k1;     ///< K1 = -s zeta + w, constant across the wave; K1 < 0
    double k2;     ///< K2 = -s w + zeta^2/2 + w^2/zeta, constant across the wave
    double eps;    ///< dissipation coefficient, in [0, 1)
    double delta;  ///< dispersion coefficient, > 0
    double c;      ///< effective damping c = s * eps / sqrt(delta)
};

/// K1 and K2 evaluated from the ahead state and the speed.
std::pair<double, double> k_constants(const State& left, double s);

/// Smallest admissible speed for the given ahead state, w/zeta + sqrt(zeta).
double lax_speed_lower_bound(const State& left);

/// Behind state connected to `left` by a front shock of speed s.
/// Throws InadmissibleSpeedError when s is at or below the Lax bound.
State right_state(const State& left, double s);

/// Rankine-Hugoniot residuals (r1, r2); both vanish for a consistent closure.
std::pair<double, double> rh_residual(const State& left, const State& right, double s);

/// Strict Lax admissibility check, exact floating comparison on both sides.
bool lax_check(const ClosureData& data);

/// Assembles and validates a ClosureData record.
///
/// With allow_nonlax the speed bound is not enforced; this only makes sense
/// for the special family w_l = 0, zeta_l = 1 where K1 = -s regardless.
ClosureData make_closure(const State& left, double s, double eps, double delta,
                         bool allow_nonlax = false);

} // namespace sgn::closure

#endif
